#pragma once

// Standard parahoric types: subsets of the affine simple reflections that
// generate a finite subgroup W_P of W~.

#include "dahakit/extweyl.hpp"

#include <string>
#include <vector>

namespace dahakit {

struct ParahoricType {
    std::vector<int> subset;  // sorted, distinct, within 0..n

    friend bool operator==(const ParahoricType&, const ParahoricType&) = default;
    friend auto operator<=>(const ParahoricType&, const ParahoricType&) = default;
};

/// Normalizes and validates; throws std::invalid_argument if W_P is infinite or
/// an index is out of range.
ParahoricType make_parahoric(const AffineWeylGroup& g, std::vector<int> subset);

/// Every standard parahoric type, sorted by (size, subset). The Iwahori type
/// (empty subset) comes first.
std::vector<ParahoricType> enumerate_standard(const RootDatum& d);

/// Sequence 0 <= i_0 < ... < i_m listing the affine nodes not in the subset.
/// Only types A, B and C. Throws std::invalid_argument otherwise.
std::vector<int> to_classical_index(const RootDatum& d, const ParahoricType& p);
ParahoricType from_classical_index(const RootDatum& d, const std::vector<int>& index);
bool has_classical_index(const RootDatum& d);

std::vector<ExtWeylElt> levi_weyl_group(const AffineWeylGroup& g, const ParahoricType& p);

/// Order of the finite Weyl group of a Cartan type (for cross-checks).
long weyl_group_order(char type, int rank);

/// Order of W_P from the Cartan type of the sub-diagram, computed by splitting
/// the affine Cartan matrix restricted to the subset into components.
long subdiagram_weyl_order(const RootDatum& d, const ParahoricType& p);

std::string to_string(const ParahoricType& p);

}  // namespace dahakit
