#pragma once

// Double-coset function spaces Q[P\W~/Q]. A function is stored by its values
// on minimal-length double-coset representatives, and the product is
//   (f1 * f2)(w) = sum over v in W~/W_Q of f1(v) f2(v^{-1} w).

#include "dahakit/parahoric.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace dahakit {

struct DCosetFn {
    ParahoricType P;
    ParahoricType Q;
    std::map<ExtWeylElt, Rational> support;  // min-length reps, nonzero values

    bool is_zero() const { return support.empty(); }
    friend bool operator==(const DCosetFn&, const DCosetFn&) = default;
};

/// Outcome of comparing Av(lambda) Av(mu) with 1_lambda * 1_mu: when the two
/// are proportional, c * (1_lambda * 1_mu) equals the image of the product.
struct AvFit {
    bool proportional = false;
    Rational c;
};

struct AvEmbedding {
    DCosetFn indicator;
    /// Fitted from the square of Av(lambda); empty when no constant fits.
    std::optional<Rational> normalization;
};

class ConvolutionAlgebra {
public:
    explicit ConvolutionAlgebra(std::shared_ptr<const AffineWeylGroup> group);

    const AffineWeylGroup& group() const { return *group_; }

    DCosetFn zero(const ParahoricType& p, const ParahoricType& q) const;
    /// 1_{W_P}.
    DCosetFn unit(const ParahoricType& p) const;
    DCosetFn indicator(const ParahoricType& p, const ParahoricType& q, const ExtWeylElt& w) const;
    /// Rewrites the keys as min-length representatives, merging duplicates
    /// and dropping zeros. Used on decoded input.
    DCosetFn canonicalize(const DCosetFn& f) const;

    Rational value(const DCosetFn& f, const ExtWeylElt& w) const;
    DCosetFn add(const DCosetFn& a, const DCosetFn& b) const;
    DCosetFn scale(const Rational& c, const DCosetFn& f) const;
    /// Throws std::invalid_argument when the middle types differ.
    DCosetFn convolve(const DCosetFn& f1, const DCosetFn& f2) const;

    /// Maximal length of a support representative; -1 for the zero function.
    int max_length(const DCosetFn& f) const;

    /// The elements of W_P x W_Q.
    std::vector<ExtWeylElt> double_coset(const ParahoricType& p, const ExtWeylElt& x,
                                         const ParahoricType& q) const;
    /// Min-length representatives of the left W_Q-cosets inside W_P x W_Q.
    std::vector<ExtWeylElt> left_cosets(const ParahoricType& p, const ExtWeylElt& x,
                                        const ParahoricType& q) const;

    /// Orbit of lambda under the finite parts of W_P, sorted.
    std::vector<FinCoweight> parabolic_orbit(const ParahoricType& p, const FinCoweight& lambda) const;
    /// The image of Av(lambda) Av(mu) under Av(nu) -> 1_{W_P nu W_P}.
    DCosetFn av_product_image(const ParahoricType& p, const FinCoweight& lambda, const FinCoweight& mu) const;
    AvFit av_fit(const ParahoricType& p, const FinCoweight& lambda, const FinCoweight& mu) const;
    AvEmbedding av_embed(const ParahoricType& p, const FinCoweight& lambda) const;

private:
    const std::vector<ExtWeylElt>& parabolic(const ParahoricType& p) const;
    void require_finite(const ParahoricType& p) const;

    std::shared_ptr<const AffineWeylGroup> group_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<int>, std::vector<ExtWeylElt>> parabolic_cache_;
};

}  // namespace dahakit
