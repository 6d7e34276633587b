#pragma once

// Operator model of H on Sym(X*(T~)_Q)[u]:
//   s_i   acts by p -> (s_i p) + u * Delta_i(p),
//   omega acts by p -> (omega p),
//   xi, u act by multiplication.
// It shares no multiplication code with Daha and serves as its cross-check.

#include "dahakit/daha.hpp"

#include <memory>

namespace dahakit {

/// Delta_i(p) = (p - s_i p) / alpha_i. Throws std::logic_error on a nonzero
/// remainder.
AffPoly divided_difference(const AffineWeylGroup& g, int i, const AffPoly& p);

class PolynomialRep {
public:
    explicit PolynomialRep(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

    AffPoly divided_difference(int i, const AffPoly& p) const;
    /// The operator attached to s_i.
    AffPoly act_simple(int i, const AffPoly& p) const;
    /// The operator attached to a group element, composed along a reduced word.
    AffPoly act_group(const ExtWeylElt& w, const AffPoly& p) const;
    AffPoly act(const DahaElt& a, const AffPoly& p) const;

private:
    std::shared_ptr<const AffineWeylGroup> group_;
};

}  // namespace dahakit
