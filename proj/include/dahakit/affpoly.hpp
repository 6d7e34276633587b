#pragma once

// Sparse polynomials in Sym(X*(T~)_Q)[u].
//
// Variables are indexed 0 = Lambda_can, 1..n = alpha_1..alpha_n,
// n+1 = delta, n+2 = u. A linear polynomial in the first n+2 variables is
// the same thing as an AffWeight.

#include "dahakit/extweyl.hpp"

#include <map>
#include <vector>

namespace dahakit {

using Monomial = std::vector<int>;

class AffPoly {
public:
    AffPoly() = default;
    explicit AffPoly(int rank) : rank_(rank) {}

    static AffPoly constant(int rank, const Rational& c);
    static AffPoly linear(const AffWeight& xi);
    static AffPoly u(int rank);
    static AffPoly variable(int rank, int var);

    int rank() const { return rank_; }
    int num_vars() const { return rank_ + 3; }
    int u_var() const { return rank_ + 2; }
    int delta_var() const { return rank_ + 1; }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    AffPoly& operator+=(const AffPoly& o);
    AffPoly& operator-=(const AffPoly& o);
    AffPoly& operator*=(const Rational& c);
    friend AffPoly operator+(AffPoly a, const AffPoly& b) { return a += b; }
    friend AffPoly operator-(AffPoly a, const AffPoly& b) { return a -= b; }
    friend AffPoly operator*(const Rational& c, AffPoly a) { return a *= c; }
    friend AffPoly operator*(const AffPoly& a, const AffPoly& b);
    friend bool operator==(const AffPoly& a, const AffPoly& b) { return a.terms_ == b.terms_; }

    /// Ring endomorphism fixing u and sending variable v (v <= n+1) to images[v].
    AffPoly substitute(const std::vector<AffPoly>& images) const;

private:
    void check_compatible(const AffPoly& o) const;

    int rank_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// Action of W~ on polynomials: the ring automorphism extending the action on
/// X*(T~) and fixing u.
AffPoly act_on_poly(const AffineWeylGroup& g, const ExtWeylElt& a, const AffPoly& p);

/// Exact quotient p / form for a nonzero linear form. Throws std::logic_error
/// if the division leaves a remainder.
AffPoly divide_by_linear(const AffPoly& p, const AffWeight& form);

/// Image modulo the ideal (u, delta).
AffPoly drop_u_and_delta(const AffPoly& p);

}  // namespace dahakit
