#pragma once

// Weight and coweight lattices of the universal Cartan torus
//   X*(T~)  = Z Lambda_can + X*(T) + Z delta,
//   X_*(T~) = Z K_can     + X_*(T) + Z d,
// with <Lambda_can, K_can> = <delta, d> = 1 and all cross pairings zero.

#include "dahakit/rootsys.hpp"

namespace dahakit {

struct AffWeight {
    Rational c_lambda;  // coefficient of Lambda_can
    FinWeight fin;
    Rational c_delta;   // coefficient of delta

    AffWeight& operator+=(const AffWeight& o);
    AffWeight& operator-=(const AffWeight& o);
    friend AffWeight operator+(AffWeight a, const AffWeight& b) { return a += b; }
    friend AffWeight operator-(AffWeight a, const AffWeight& b) { return a -= b; }
    friend AffWeight operator*(const Rational& c, AffWeight a);
    friend AffWeight operator-(AffWeight a) { return Rational(-1) * std::move(a); }
    friend bool operator==(const AffWeight&, const AffWeight&) = default;
    bool is_zero() const { return c_lambda == 0 && c_delta == 0 && fin.is_zero(); }
};

struct AffCoweight {
    Rational c_k;  // coefficient of K_can
    FinCoweight fin;
    Rational c_d;  // coefficient of d

    AffCoweight& operator+=(const AffCoweight& o);
    AffCoweight& operator-=(const AffCoweight& o);
    friend AffCoweight operator+(AffCoweight a, const AffCoweight& b) { return a += b; }
    friend AffCoweight operator-(AffCoweight a, const AffCoweight& b) { return a -= b; }
    friend AffCoweight operator*(const Rational& c, AffCoweight a);
    friend AffCoweight operator-(AffCoweight a) { return Rational(-1) * std::move(a); }
    friend bool operator==(const AffCoweight&, const AffCoweight&) = default;
    bool is_zero() const { return c_k == 0 && c_d == 0 && fin.is_zero(); }
};

// Canonical generators and embeddings of the finite parts.
AffWeight lambda_can(const RootDatum& d);
AffWeight delta(const RootDatum& d);
AffWeight embed(const FinWeight& x);
AffCoweight k_can(const RootDatum& d);
AffCoweight d_gen(const RootDatum& d);
AffCoweight embed(const FinCoweight& y);

/// Lambda_0 = Lambda_can / (2 h^vee).
AffWeight lambda_0(const RootDatum& d);
/// K = 2 h^vee K_can.
AffCoweight k_normalized(const RootDatum& d);

/// Natural pairing. Throws std::invalid_argument if the ranks differ.
Rational pair(const RootDatum& d, const AffWeight& xi, const AffCoweight& eta);

/// alpha_0 = delta - theta; alpha_i for 1 <= i <= n. Throws std::out_of_range.
AffWeight affine_simple_root(const RootDatum& d, int i);
/// alpha_0^vee = 2 h^vee K_can - theta^vee; alpha_i^vee for 1 <= i <= n.
AffCoweight affine_simple_coroot(const RootDatum& d, int i);

/// The isomorphism X_*(T)_Q -> X*(T)_Q induced by the Killing form.
FinWeight star(const RootDatum& d, const FinCoweight& lambda);

/// <alpha_i, alpha_j^vee> for i, j in 0..n.
IntMatrix affine_cartan_matrix(const RootDatum& d);

}  // namespace dahakit
