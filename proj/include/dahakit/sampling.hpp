#pragma once

// Random objects for the verification suites. Values are drawn from
// std::mt19937_64 with reduction by modulus so that a seed replays the same
// samples on every platform.

#include "dahakit/daha.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace dahakit {

/// Mixes a label into a base seed (FNV-1a over the label, then splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    /// Integers in [-3, 3], occasionally halved.
    Rational small_rational();
    FinWeight fin_weight(const RootDatum& d);
    FinCoweight fin_coweight(const RootDatum& d);
    AffWeight aff_weight(const RootDatum& d);
    AffCoweight aff_coweight(const RootDatum& d);
    /// Entries in [-bound, bound].
    IntVector lattice_vector(const RootDatum& d, long bound);

    WeylElt weyl_elt(const RootDatum& d);
    /// A random word of length <= max_len in s_0..s_n followed by a random
    /// length-zero element.
    ExtWeylElt ext_weyl(const AffineWeylGroup& g, int max_len);

    /// Sum of up to three products of random linear forms (u included with
    /// some probability), total degree <= max_degree.
    AffPoly poly(const RootDatum& d, int max_degree);
    AffPoly homogeneous_poly(const RootDatum& d, int degree);
    DahaElt daha(const AffineWeylGroup& g, int max_len, int max_degree, int max_terms);

private:
    AffPoly linear_or_u(const RootDatum& d);

    std::mt19937_64 rng_;
};

}  // namespace dahakit
