#pragma once

// The extended affine Weyl group W~ = X_*(T) x| W, its action on the
// Kac-Moody (co)weight lattices, and the Coxeter structure of W_aff.

#include "dahakit/afflattice.hpp"

#include <vector>

namespace dahakit {

/// Element t^lambda w of W~. `lambda` holds integer coordinates in the Z-basis
/// of X_*(T) (simple coroots when simply connected, fundamental coweights when
/// adjoint).
struct ExtWeylElt {
    IntVector lambda;
    WeylElt w;

    friend bool operator==(const ExtWeylElt&, const ExtWeylElt&) = default;
    friend auto operator<=>(const ExtWeylElt&, const ExtWeylElt&) = default;
};

/// A word s_{i_1} ... s_{i_k} followed by a length-zero element, identified
/// by its position in AffineWeylGroup::omega_elements().
struct CoxOmegaWord {
    std::vector<int> word;
    int omega = 0;

    friend bool operator==(const CoxOmegaWord&, const CoxOmegaWord&) = default;
};

class AffineWeylGroup {
public:
    /// Calibrates s_0 and enumerates Omega_I. Throws std::logic_error if no
    /// sign makes s_0 the reflection in alpha_0.
    explicit AffineWeylGroup(RootDatumPtr datum);

    const RootDatum& datum() const { return *datum_; }
    const RootDatumPtr& datum_ptr() const { return datum_; }
    int rank() const { return datum_->rank(); }

    /// The sign e with s_0 = t^{e theta^vee} s_theta.
    int s0_sign() const { return s0_sign_; }

    ExtWeylElt identity() const;
    ExtWeylElt translation(const IntVector& lattice_coords) const;
    /// Throws std::invalid_argument if lambda is not in X_*(T).
    ExtWeylElt translation(const FinCoweight& lambda) const;
    ExtWeylElt finite(const WeylElt& w) const;
    /// s_0, ..., s_n. Throws std::out_of_range.
    const ExtWeylElt& simple_reflection(int i) const;

    ExtWeylElt mul(const ExtWeylElt& a, const ExtWeylElt& b) const;
    ExtWeylElt inv(const ExtWeylElt& a) const;
    /// Structural validation of a decoded element. Throws std::invalid_argument.
    void check(const ExtWeylElt& a) const;

    FinCoweight translation_part(const ExtWeylElt& a) const;

    AffWeight act_on_weight(const ExtWeylElt& a, const AffWeight& xi) const;
    AffCoweight act_on_coweight(const ExtWeylElt& a, const AffCoweight& eta) const;
    /// Images of Lambda_can, alpha_1..alpha_n, delta.
    std::vector<AffWeight> weight_basis_images(const ExtWeylElt& a) const;

    /// Iwahori-Matsumoto length: number of positive affine real roots sent to
    /// negative ones.
    int length(const ExtWeylElt& a) const;
    bool is_left_descent(const ExtWeylElt& a, int i) const;
    bool is_right_descent(const ExtWeylElt& a, int i) const;

    /// Lexicographically smallest reduced word (indices ordered 0 < 1 < ... < n).
    CoxOmegaWord reduced_word(const ExtWeylElt& a) const;
    ExtWeylElt evaluate(const CoxOmegaWord& w) const;

    /// Length-zero elements; index 0 is the identity.
    const std::vector<ExtWeylElt>& omega_elements() const { return omega_; }
    /// Throws std::invalid_argument if `omega` is not of length zero.
    int omega_id(const ExtWeylElt& omega) const;
    /// (a * omega^{-1}, omega) with omega of length zero and a * omega^{-1} in W_aff.
    std::pair<ExtWeylElt, ExtWeylElt> omega_decompose(const ExtWeylElt& a) const;
    /// j with omega s_i omega^{-1} = s_j.
    int conj_simple_by_omega(const ExtWeylElt& omega, int i) const;

    /// Elements of the subgroup generated by {s_i : i in subset}. Throws
    /// std::invalid_argument if that subgroup is infinite.
    std::vector<ExtWeylElt> parabolic_elements(const std::vector<int>& subset) const;
    bool parabolic_is_finite(const std::vector<int>& subset) const;

    /// Minimal-length element of a W_Q.
    ExtWeylElt min_left_coset_rep(const ExtWeylElt& a, const std::vector<int>& q) const;
    /// Minimal-length element of W_P a W_Q.
    ExtWeylElt min_double_coset_rep(const std::vector<int>& p, const ExtWeylElt& a,
                                    const std::vector<int>& q) const;
    /// All elements of length <= max_length, sorted by (length, element).
    std::vector<ExtWeylElt> elements_up_to_length(int max_length) const;
    /// Minimal representatives of every double coset W_P x W_Q meeting
    /// {length <= max_length}, each once, sorted by (length, element).
    std::vector<ExtWeylElt> double_cosets(const std::vector<int>& p, const std::vector<int>& q,
                                          int max_length) const;

    /// Bruhat order; false when the Omega_I components differ.
    bool bruhat_leq(const ExtWeylElt& a, const ExtWeylElt& b) const;

private:
    IntVector apply_w(const WeylElt& w, const IntVector& lattice) const;
    long root_pairing(int root, const IntVector& lattice) const;
    void validate_index(int i) const;
    ExtWeylElt reduce_to_omega(ExtWeylElt a, std::vector<int>* word) const;
    bool bruhat_leq_waff(const ExtWeylElt& a, const ExtWeylElt& b) const;

    RootDatumPtr datum_;
    IntMatrix root_pairings_;  // <root k, lattice basis vector j>
    int s0_sign_ = 0;
    std::vector<ExtWeylElt> simple_;
    std::vector<ExtWeylElt> omega_;
};

/// Orders elements by (length, element) for presentation.
void sort_by_length(const AffineWeylGroup& g, std::vector<ExtWeylElt>& elts);

}  // namespace dahakit
