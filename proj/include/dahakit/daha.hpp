#pragma once

// The graded double affine Hecke algebra
//   H = Q[W~] (x) Sym(X*(T~)_Q) (x) Q[u]
// with u central, deg(u) = deg(xi) = 2, deg(w~) = 0, and the cross relations
//   s_i xi - (s_i xi) s_i = <xi, alpha_i^vee> u,     omega xi = (omega xi) omega.
//
// Elements are kept in the normal form sum_w w * p_w with polynomials to the
// right of group elements. Products are computed by moving polynomials
// rightward through reduced words of the group elements.

#include "dahakit/affpoly.hpp"
#include "dahakit/parahoric.hpp"

#include <map>
#include <memory>

namespace dahakit {

struct DahaElt {
    std::map<ExtWeylElt, AffPoly> terms;  // no zero polynomials

    bool is_zero() const { return terms.empty(); }
    void add_term(const ExtWeylElt& w, const AffPoly& p);

    DahaElt& operator+=(const DahaElt& o);
    DahaElt& operator-=(const DahaElt& o);
    friend DahaElt operator+(DahaElt a, const DahaElt& b) { return a += b; }
    friend DahaElt operator-(DahaElt a, const DahaElt& b) { return a -= b; }
    friend DahaElt operator*(const Rational& c, DahaElt a);
    friend bool operator==(const DahaElt&, const DahaElt&) = default;
};

/// sum_w p_w * w, polynomials on the left. Only used for presentation.
struct LeftNormalForm {
    std::map<ExtWeylElt, AffPoly> terms;
    friend bool operator==(const LeftNormalForm&, const LeftNormalForm&) = default;
};

/// Degree in the even grading; `zero` marks the empty sum (degree -infinity).
struct DahaDegree {
    bool zero = false;
    bool homogeneous = true;
    int max_degree = 0;
};

class Daha {
public:
    explicit Daha(std::shared_ptr<const AffineWeylGroup> group);

    const AffineWeylGroup& group() const { return *group_; }
    const std::shared_ptr<const AffineWeylGroup>& group_ptr() const { return group_; }
    int rank() const { return group_->rank(); }

    DahaElt zero() const { return {}; }
    DahaElt one() const;
    DahaElt element(const ExtWeylElt& w) const;
    DahaElt reflection(int i) const;
    DahaElt poly(const AffPoly& p) const;
    DahaElt weight(const AffWeight& xi) const;
    DahaElt u() const;

    DahaElt mul(const DahaElt& a, const DahaElt& b) const;

    /// p * s_i rewritten as s_i * (s_i p) + u * Delta_i(p).
    DahaElt straighten_simple(int i, const AffPoly& p) const;
    /// p * w in normal form.
    DahaElt move_right(const AffPoly& p, const ExtWeylElt& w) const;
    LeftNormalForm to_left_form(const DahaElt& a) const;

    DahaDegree degree(const DahaElt& a) const;

    /// (1 / #W_P) sum_{w in W_P} w.
    DahaElt idempotent(const ParahoricType& p) const;
    /// e_P a e_P.
    DahaElt sandwich(const ParahoricType& p, const DahaElt& a) const;

    /// Image in H / (u, delta).
    DahaElt specialize_degenerate(const DahaElt& a) const;

private:
    std::shared_ptr<const AffineWeylGroup> group_;
};

}  // namespace dahakit
