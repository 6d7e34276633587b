#pragma once

// Finite root data of irreducible (almost simple) type.
//
// Ambient coordinates: weights (the X*(T) side) are written in the basis of
// simple roots and coweights (the X_*(T) side) in the basis of simple coroots,
// both with exact rational entries. The isogeny flavor only decides which
// rational vectors are integral.

#include "dahakit/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dahakit {

enum class Flavor { simply_connected, adjoint };

std::string to_string(Flavor f);

/// A vector on the X*(T) side, in simple-root coordinates.
struct FinWeight {
    RationalVector coords;

    FinWeight& operator+=(const FinWeight& o);
    FinWeight& operator-=(const FinWeight& o);
    friend FinWeight operator+(FinWeight a, const FinWeight& b) { return a += b; }
    friend FinWeight operator-(FinWeight a, const FinWeight& b) { return a -= b; }
    friend FinWeight operator*(const Rational& c, FinWeight a);
    friend FinWeight operator-(FinWeight a);
    friend bool operator==(const FinWeight&, const FinWeight&) = default;
    friend auto operator<=>(const FinWeight& a, const FinWeight& b) { return a.coords <=> b.coords; }
    bool is_zero() const;
};

/// A vector on the X_*(T) side, in simple-coroot coordinates.
struct FinCoweight {
    RationalVector coords;

    FinCoweight& operator+=(const FinCoweight& o);
    FinCoweight& operator-=(const FinCoweight& o);
    friend FinCoweight operator+(FinCoweight a, const FinCoweight& b) { return a += b; }
    friend FinCoweight operator-(FinCoweight a, const FinCoweight& b) { return a -= b; }
    friend FinCoweight operator*(const Rational& c, FinCoweight a);
    friend FinCoweight operator-(FinCoweight a);
    friend bool operator==(const FinCoweight&, const FinCoweight&) = default;
    friend auto operator<=>(const FinCoweight& a, const FinCoweight& b) { return a.coords <=> b.coords; }
    bool is_zero() const;
};

/// Finite Weyl group element stored as the permutation it induces on the
/// root list: perm[k] is the index of w(root k).
struct WeylElt {
    std::vector<int> perm;

    friend bool operator==(const WeylElt&, const WeylElt&) = default;
    friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

using IntMatrix = std::vector<std::vector<long>>;
using IntVector = std::vector<long>;

class RootDatum {
public:
    /// Throws std::invalid_argument for an invalid (type, rank) pair.
    static std::shared_ptr<const RootDatum> build(char type, int rank, Flavor flavor);

    char type() const { return type_; }
    int rank() const { return rank_; }
    Flavor flavor() const { return flavor_; }
    std::string name() const;  // e.g. "A2" or "B3(adj)"

    /// cartan()[i][j] = <alpha_i, alpha_j^vee>.
    const IntMatrix& cartan() const { return cartan_; }
    long cartan(int i, int j) const { return cartan_[i][j]; }
    /// Coxeter exponent m_ij for finite simple reflections i != j.
    int coxeter_exponent(int i, int j) const;

    // Root list: indices [0, N) are positive (simple roots first, sorted by
    // height), index k + N is the negative of positive root k.
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_positive_; }
    bool is_positive(int k) const { return k < num_positive_; }
    int negate(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }
    const IntVector& root(int k) const { return roots_[k]; }
    const IntVector& coroot(int k) const { return coroots_[k]; }
    std::optional<int> root_index(const IntVector& coords) const;
    long height(int k) const;

    FinWeight simple_root(int i) const;
    FinCoweight simple_coroot(int i) const;
    FinWeight root_vector(int k) const;
    FinCoweight coroot_vector(int k) const;
    FinWeight zero_weight() const;
    FinCoweight zero_coweight() const;

    /// The natural pairing X*(T)_Q x X_*(T)_Q -> Q.
    Rational pair(const FinWeight& x, const FinCoweight& y) const;
    /// <root k, y>.
    Rational pair_root(int k, const FinCoweight& y) const;

    /// (x|y)_can = sum over all roots of <a,x><a,y>.
    Rational killing_form(const FinCoweight& x, const FinCoweight& y) const;
    const IntMatrix& killing_gram() const { return killing_gram_; }
    /// Matrix taking simple-coroot coordinates of x to simple-root coordinates
    /// of x*, where <x*, y> = (x|y)_can.
    const RationalMatrix& star_matrix() const { return star_matrix_; }

    int highest_root_index() const { return highest_root_; }
    std::pair<FinWeight, FinCoweight> highest_root() const;
    int dual_coxeter_number() const { return dual_coxeter_; }
    FinWeight rho() const;

    // Weyl group.
    WeylElt identity() const;
    WeylElt simple_reflection(int i) const;
    /// Reflection in root k.
    WeylElt reflection(int k) const;
    WeylElt compose(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& w) const;
    FinWeight apply(const WeylElt& w, const FinWeight& x) const;
    FinCoweight apply(const WeylElt& w, const FinCoweight& y) const;
    /// Number of positive roots sent to negative roots.
    int length(const WeylElt& w) const;
    /// All elements of W by closure. Intended for small ranks.
    std::vector<WeylElt> weyl_group_elements() const;

    /// Orbit of a coweight under W, sorted.
    std::vector<FinCoweight> weyl_orbit(const FinCoweight& lambda) const;

    // Lattices.
    bool in_char_lattice(const FinWeight& x) const;
    bool in_cochar_lattice(const FinCoweight& y) const;
    /// Rows are a Z-basis of X*(T), written in simple-root coordinates.
    RationalMatrix char_lattice_basis() const;
    /// Rows are a Z-basis of X_*(T), written in simple-coroot coordinates.
    RationalMatrix cochar_lattice_basis() const;
    /// Coordinates of an element of X_*(T) in cochar_lattice_basis().
    IntVector cochar_lattice_coords(const FinCoweight& y) const;
    FinCoweight from_cochar_lattice_coords(const IntVector& coords) const;

    /// Simple-root coefficients of theta (the affine diagram marks).
    const IntVector& theta_marks() const { return roots_[highest_root_]; }

private:
    RootDatum() = default;

    char type_ = 'A';
    int rank_ = 0;
    Flavor flavor_ = Flavor::simply_connected;
    IntMatrix cartan_;
    RationalMatrix cartan_q_;
    RationalMatrix cartan_inv_;
    std::vector<IntVector> roots_;
    std::vector<IntVector> coroots_;
    std::map<IntVector, int> root_lookup_;
    int num_positive_ = 0;
    int highest_root_ = 0;
    int dual_coxeter_ = 0;
    IntMatrix killing_gram_;
    RationalMatrix star_matrix_;
    std::vector<WeylElt> simple_reflections_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Symmetric bilinear form matrix (alpha_i, alpha_j) fixing root lengths, for
/// validated (type, rank). Exposed for tests.
IntMatrix symmetric_form(char type, int rank);

}  // namespace dahakit
