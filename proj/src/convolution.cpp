#include "dahakit/convolution.hpp"

#include <set>
#include <stdexcept>

namespace dahakit {

ConvolutionAlgebra::ConvolutionAlgebra(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

const std::vector<ExtWeylElt>& ConvolutionAlgebra::parabolic(const ParahoricType& p) const
{
    std::lock_guard lock(cache_mutex_);
    auto it = parabolic_cache_.find(p.subset);
    if (it == parabolic_cache_.end()) it = parabolic_cache_.emplace(p.subset, group_->parabolic_elements(p.subset)).first;
    return it->second;
}

void ConvolutionAlgebra::require_finite(const ParahoricType& p) const
{
    for (int i : p.subset)
        if (i < 0 || i > group_->rank()) throw std::invalid_argument("parahoric index out of range");
    if (!group_->parabolic_is_finite(p.subset)) throw std::invalid_argument("subset generates an infinite subgroup");
}

DCosetFn ConvolutionAlgebra::zero(const ParahoricType& p, const ParahoricType& q) const
{
    require_finite(p);
    require_finite(q);
    return DCosetFn{p, q, {}};
}

DCosetFn ConvolutionAlgebra::unit(const ParahoricType& p) const { return indicator(p, p, group_->identity()); }

DCosetFn ConvolutionAlgebra::indicator(const ParahoricType& p, const ParahoricType& q, const ExtWeylElt& w) const
{
    DCosetFn f = zero(p, q);
    f.support.emplace(group_->min_double_coset_rep(p.subset, w, q.subset), Rational(1));
    return f;
}

DCosetFn ConvolutionAlgebra::canonicalize(const DCosetFn& f) const
{
    DCosetFn out = zero(f.P, f.Q);
    for (const auto& [w, c] : f.support) {
        group_->check(w);
        out.support[group_->min_double_coset_rep(f.P.subset, w, f.Q.subset)] += c;
    }
    std::erase_if(out.support, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Rational ConvolutionAlgebra::value(const DCosetFn& f, const ExtWeylElt& w) const
{
    auto it = f.support.find(group_->min_double_coset_rep(f.P.subset, w, f.Q.subset));
    return it == f.support.end() ? Rational(0) : it->second;
}

DCosetFn ConvolutionAlgebra::add(const DCosetFn& a, const DCosetFn& b) const
{
    if (a.P != b.P || a.Q != b.Q) throw std::invalid_argument("adding functions of different types");
    DCosetFn out = a;
    for (const auto& [w, c] : b.support) {
        Rational& slot = out.support[w];
        slot += c;
        if (slot == 0) out.support.erase(w);
    }
    return out;
}

DCosetFn ConvolutionAlgebra::scale(const Rational& c, const DCosetFn& f) const
{
    DCosetFn out{f.P, f.Q, {}};
    if (c == 0) return out;
    for (const auto& [w, v] : f.support) out.support.emplace(w, c * v);
    return out;
}

std::vector<ExtWeylElt> ConvolutionAlgebra::double_coset(const ParahoricType& p, const ExtWeylElt& x,
                                                         const ParahoricType& q) const
{
    std::set<ExtWeylElt> elts;
    for (const auto& a : parabolic(p)) {
        const ExtWeylElt ax = group_->mul(a, x);
        for (const auto& b : parabolic(q)) elts.insert(group_->mul(ax, b));
    }
    return {elts.begin(), elts.end()};
}

std::vector<ExtWeylElt> ConvolutionAlgebra::left_cosets(const ParahoricType& p, const ExtWeylElt& x,
                                                        const ParahoricType& q) const
{
    std::set<ExtWeylElt> reps;
    for (const auto& a : parabolic(p)) reps.insert(group_->min_left_coset_rep(group_->mul(a, x), q.subset));
    return {reps.begin(), reps.end()};
}

DCosetFn ConvolutionAlgebra::convolve(const DCosetFn& f1, const DCosetFn& f2) const
{
    if (f1.Q != f2.P) throw std::invalid_argument("middle parahoric types differ");
    const AffineWeylGroup& g = *group_;
    DCosetFn out = zero(f1.P, f2.Q);

    // The sum over W~/W_Q only meets cosets inside supp(f1), and a nonzero
    // value at w forces w into (W_P x W_Q) y W_R for x in supp(f1), y in supp(f2).
    std::vector<std::pair<std::vector<ExtWeylElt>, Rational>> cosets;
    std::set<ExtWeylElt> candidates;
    for (const auto& [x, c1] : f1.support) {
        cosets.emplace_back(left_cosets(f1.P, x, f1.Q), c1);
        const auto elts = double_coset(f1.P, x, f1.Q);
        for (const auto& [y, c2] : f2.support)
            for (const auto& e : elts) candidates.insert(g.min_double_coset_rep(f1.P.subset, g.mul(e, y), f2.Q.subset));
    }
    for (const auto& m : candidates) {
        Rational total = 0;
        for (const auto& [reps, c1] : cosets)
            for (const auto& v : reps) {
                const Rational c2 = value(f2, g.mul(g.inv(v), m));
                if (c2 != 0) total += c1 * c2;
            }
        if (total != 0) out.support.emplace(m, total);
    }
    return out;
}

int ConvolutionAlgebra::max_length(const DCosetFn& f) const
{
    int best = -1;
    for (const auto& [w, c] : f.support) best = std::max(best, group_->length(w));
    return best;
}

std::vector<FinCoweight> ConvolutionAlgebra::parabolic_orbit(const ParahoricType& p, const FinCoweight& lambda) const
{
    const RootDatum& d = group_->datum();
    std::set<FinCoweight> orbit;
    for (const auto& w : parabolic(p)) orbit.insert(d.apply(w.w, lambda));
    return {orbit.begin(), orbit.end()};
}

DCosetFn ConvolutionAlgebra::av_product_image(const ParahoricType& p, const FinCoweight& lambda,
                                              const FinCoweight& mu) const
{
    require_finite(p);
    std::map<FinCoweight, long> counts;
    for (const auto& a : parabolic_orbit(p, lambda))
        for (const auto& b : parabolic_orbit(p, mu)) ++counts[a + b];

    DCosetFn out = zero(p, p);
    std::set<FinCoweight> seen;
    for (const auto& [nu, n] : counts) {
        if (seen.contains(nu)) continue;
        const auto orbit = parabolic_orbit(p, nu);
        for (const auto& x : orbit) {
            seen.insert(x);
            // The product is W_P-invariant, so multiplicities are constant on orbits.
            auto it = counts.find(x);
            if (it == counts.end() || it->second != n) throw std::logic_error("Av product is not W_P-invariant");
        }
        out.support[group_->min_double_coset_rep(p.subset, group_->translation(nu), p.subset)] += Rational(n);
    }
    return out;
}

AvFit ConvolutionAlgebra::av_fit(const ParahoricType& p, const FinCoweight& lambda, const FinCoweight& mu) const
{
    const DCosetFn lhs =
        convolve(indicator(p, p, group_->translation(lambda)), indicator(p, p, group_->translation(mu)));
    const DCosetFn rhs = av_product_image(p, lambda, mu);
    AvFit fit;
    if (lhs.support.size() != rhs.support.size() || lhs.is_zero()) return fit;
    std::optional<Rational> ratio;
    for (const auto& [w, c] : lhs.support) {
        auto it = rhs.support.find(w);
        if (it == rhs.support.end()) return fit;
        const Rational r = it->second / c;
        if (ratio && *ratio != r) return fit;
        ratio = r;
    }
    fit.proportional = true;
    fit.c = *ratio;
    return fit;
}

AvEmbedding ConvolutionAlgebra::av_embed(const ParahoricType& p, const FinCoweight& lambda) const
{
    AvEmbedding out;
    out.indicator = indicator(p, p, group_->translation(lambda));
    const AvFit fit = av_fit(p, lambda, lambda);
    if (fit.proportional) out.normalization = fit.c;
    return out;
}

}  // namespace dahakit
