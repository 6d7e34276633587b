#include "dahakit/extweyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace dahakit {

AffineWeylGroup::AffineWeylGroup(RootDatumPtr datum) : datum_(std::move(datum))
{
    const RootDatum& d = *datum_;
    const int n = d.rank();

    root_pairings_.assign(d.num_roots(), IntVector(n, 0));
    for (int k = 0; k < d.num_roots(); ++k) {
        for (int j = 0; j < n; ++j) {
            if (d.flavor() == Flavor::adjoint) {
                root_pairings_[k][j] = d.root(k)[j];
            } else {
                long s = 0;
                for (int i = 0; i < n; ++i) s += d.root(k)[i] * d.cartan(i, j);
                root_pairings_[k][j] = s;
            }
        }
    }

    // s_0 = t^{e theta^vee} s_theta; pick the sign that makes it the
    // reflection in alpha_0 on a spanning set of X*(T~).
    const int theta = d.highest_root_index();
    const IntVector theta_co = d.cochar_lattice_coords(d.coroot_vector(theta));
    const AffWeight a0 = affine_simple_root(d, 0);
    const AffCoweight a0v = affine_simple_coroot(d, 0);
    std::vector<AffWeight> spanning{lambda_can(d), delta(d)};
    for (int i = 0; i < n; ++i) spanning.push_back(embed(d.simple_root(i)));

    for (int sign : {1, -1}) {
        IntVector lam = theta_co;
        for (auto& x : lam) x *= sign;
        ExtWeylElt candidate{lam, d.reflection(theta)};
        bool ok = true;
        for (const auto& xi : spanning) {
            const AffWeight expected = xi - pair(d, xi, a0v) * a0;
            if (act_on_weight(candidate, xi) != expected) {
                ok = false;
                break;
            }
        }
        if (ok) {
            s0_sign_ = sign;
            simple_.push_back(std::move(candidate));
            break;
        }
    }
    if (s0_sign_ == 0) throw std::logic_error("no sign convention realizes s_0 as a reflection");
    for (int i = 0; i < n; ++i) simple_.push_back(finite(d.simple_reflection(i)));

    omega_.push_back(identity());
    if (d.flavor() == Flavor::adjoint) {
        const IntVector& marks = d.theta_marks();
        for (int i = 0; i < n; ++i) {
            if (marks[i] != 1) continue;
            IntVector e(n, 0);
            e[i] = 1;
            ExtWeylElt omega = reduce_to_omega(translation(e), nullptr);
            if (std::find(omega_.begin(), omega_.end(), omega) == omega_.end())
                omega_.push_back(std::move(omega));
        }
    }
}

ExtWeylElt AffineWeylGroup::identity() const
{
    return {IntVector(rank(), 0), datum_->identity()};
}

ExtWeylElt AffineWeylGroup::translation(const IntVector& lattice_coords) const
{
    if (static_cast<int>(lattice_coords.size()) != rank())
        throw std::invalid_argument("translation vector has wrong length");
    return {lattice_coords, datum_->identity()};
}

ExtWeylElt AffineWeylGroup::translation(const FinCoweight& lambda) const
{
    return translation(datum_->cochar_lattice_coords(lambda));
}

ExtWeylElt AffineWeylGroup::finite(const WeylElt& w) const { return {IntVector(rank(), 0), w}; }

void AffineWeylGroup::validate_index(int i) const
{
    if (i < 0 || i > rank()) throw std::out_of_range("affine simple reflection index out of range");
}

const ExtWeylElt& AffineWeylGroup::simple_reflection(int i) const
{
    validate_index(i);
    return simple_[i];
}

IntVector AffineWeylGroup::apply_w(const WeylElt& w, const IntVector& lattice) const
{
    const RootDatum& d = *datum_;
    const int n = rank();
    IntVector out(n, 0);
    if (d.flavor() == Flavor::simply_connected) {
        for (int i = 0; i < n; ++i) {
            if (lattice[i] == 0) continue;
            const IntVector& img = d.coroot(w.perm[i]);
            for (int j = 0; j < n; ++j) out[j] += lattice[i] * img[j];
        }
        return out;
    }
    // m_j(w lambda) = <w^{-1} alpha_j, lambda>
    for (int k = 0; k < d.num_roots(); ++k) {
        const int j = w.perm[k];
        if (j < n) out[j] = root_pairing(k, lattice);
    }
    return out;
}

long AffineWeylGroup::root_pairing(int root, const IntVector& lattice) const
{
    long s = 0;
    const IntVector& row = root_pairings_[root];
    for (std::size_t j = 0; j < lattice.size(); ++j) s += row[j] * lattice[j];
    return s;
}

ExtWeylElt AffineWeylGroup::mul(const ExtWeylElt& a, const ExtWeylElt& b) const
{
    if (a.lambda.size() != b.lambda.size() || a.w.perm.size() != b.w.perm.size())
        throw std::invalid_argument("elements from different root data");
    IntVector lam = apply_w(a.w, b.lambda);
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += a.lambda[i];
    return {std::move(lam), datum_->compose(a.w, b.w)};
}

ExtWeylElt AffineWeylGroup::inv(const ExtWeylElt& a) const
{
    WeylElt winv = datum_->inverse(a.w);
    IntVector lam = apply_w(winv, a.lambda);
    for (auto& x : lam) x = -x;
    return {std::move(lam), std::move(winv)};
}

void AffineWeylGroup::check(const ExtWeylElt& a) const
{
    const RootDatum& d = *datum_;
    if (static_cast<int>(a.lambda.size()) != rank())
        throw std::invalid_argument("translation vector has wrong length");
    if (static_cast<int>(a.w.perm.size()) != d.num_roots())
        throw std::invalid_argument("Weyl permutation has wrong length");
    std::vector<bool> hit(d.num_roots(), false);
    for (int x : a.w.perm) {
        if (x < 0 || x >= d.num_roots() || hit[x]) throw std::invalid_argument("w_perm is not a permutation");
        hit[x] = true;
    }
    // A root permutation comes from W iff it is linear: determined by the
    // images of the simple roots.
    for (int k = 0; k < d.num_roots(); ++k) {
        IntVector img(rank(), 0);
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) img[j] += d.root(k)[i] * d.root(a.w.perm[i])[j];
        auto idx = d.root_index(img);
        if (!idx || *idx != a.w.perm[k]) throw std::invalid_argument("w_perm is not induced by a Weyl group element");
    }
    // Linear and root-preserving is not enough (diagram automorphisms); require
    // that simple reflections reduce it to the identity.
    WeylElt w = a.w;
    for (int guard = 0; guard <= d.num_positive(); ++guard) {
        int i = 0;
        while (i < rank() && d.is_positive(w.perm[i])) ++i;
        if (i == rank()) {
            if (w != d.identity()) throw std::invalid_argument("w_perm is not induced by a Weyl group element");
            return;
        }
        w = d.compose(w, d.simple_reflection(i));
    }
    throw std::invalid_argument("w_perm is not induced by a Weyl group element");
}

FinCoweight AffineWeylGroup::translation_part(const ExtWeylElt& a) const
{
    return datum_->from_cochar_lattice_coords(a.lambda);
}

AffWeight AffineWeylGroup::act_on_weight(const ExtWeylElt& a, const AffWeight& xi) const
{
    const RootDatum& d = *datum_;
    AffWeight out{xi.c_lambda, d.apply(a.w, xi.fin), xi.c_delta};
    if (std::all_of(a.lambda.begin(), a.lambda.end(), [](long x) { return x == 0; })) return out;
    const FinCoweight lam = translation_part(a);
    const Rational norm = d.killing_form(lam, lam);
    const Rational level = out.c_lambda;
    out.c_delta += d.pair(out.fin, lam) - norm / 2 * level;
    if (level != 0) out.fin -= level * star(d, lam);
    return out;
}

AffCoweight AffineWeylGroup::act_on_coweight(const ExtWeylElt& a, const AffCoweight& eta) const
{
    const RootDatum& d = *datum_;
    AffCoweight out{eta.c_k, d.apply(a.w, eta.fin), eta.c_d};
    if (std::all_of(a.lambda.begin(), a.lambda.end(), [](long x) { return x == 0; })) return out;
    const FinCoweight lam = translation_part(a);
    const Rational norm = d.killing_form(lam, lam);
    const Rational deg = out.c_d;
    out.c_k += d.killing_form(out.fin, lam) - norm / 2 * deg;
    if (deg != 0) out.fin -= deg * lam;
    return out;
}

std::vector<AffWeight> AffineWeylGroup::weight_basis_images(const ExtWeylElt& a) const
{
    const RootDatum& d = *datum_;
    std::vector<AffWeight> out;
    out.reserve(rank() + 2);
    out.push_back(act_on_weight(a, lambda_can(d)));
    for (int i = 0; i < rank(); ++i) out.push_back(act_on_weight(a, embed(d.simple_root(i))));
    out.push_back(delta(d));
    return out;
}

int AffineWeylGroup::length(const ExtWeylElt& a) const
{
    const RootDatum& d = *datum_;
    long count = 0;
    for (int b = 0; b < d.num_roots(); ++b) {
        const int g = a.w.perm[b];
        const long m = root_pairing(g, a.lambda);
        const bool image_negative = !d.is_positive(g);
        // b + k delta with k >= 0 (b > 0) or k >= 1 (b < 0) maps to
        // w(b) + (k + m) delta.
        if (d.is_positive(b)) {
            count += std::max(0L, -m);
            if (m <= 0 && image_negative) ++count;
        } else {
            count += std::max(0L, -m - 1);
            if (m <= -1 && image_negative) ++count;
        }
    }
    return static_cast<int>(count);
}

bool AffineWeylGroup::is_left_descent(const ExtWeylElt& a, int i) const
{
    return length(mul(simple_reflection(i), a)) < length(a);
}

bool AffineWeylGroup::is_right_descent(const ExtWeylElt& a, int i) const
{
    return length(mul(a, simple_reflection(i))) < length(a);
}

ExtWeylElt AffineWeylGroup::reduce_to_omega(ExtWeylElt a, std::vector<int>* word) const
{
    int len = length(a);
    while (len > 0) {
        bool moved = false;
        for (int i = 0; i <= rank(); ++i) {
            ExtWeylElt b = mul(simple_[i], a);
            const int lb = length(b);
            if (lb < len) {
                if (word) word->push_back(i);
                a = std::move(b);
                len = lb;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("element of positive length without a left descent");
    }
    return a;
}

CoxOmegaWord AffineWeylGroup::reduced_word(const ExtWeylElt& a) const
{
    CoxOmegaWord out;
    ExtWeylElt omega = reduce_to_omega(a, &out.word);
    out.omega = omega_id(omega);
    return out;
}

ExtWeylElt AffineWeylGroup::evaluate(const CoxOmegaWord& w) const
{
    if (w.omega < 0 || w.omega >= static_cast<int>(omega_.size()))
        throw std::out_of_range("omega id out of range");
    ExtWeylElt out = identity();
    for (int i : w.word) out = mul(out, simple_reflection(i));
    return mul(out, omega_[w.omega]);
}

int AffineWeylGroup::omega_id(const ExtWeylElt& omega) const
{
    auto it = std::find(omega_.begin(), omega_.end(), omega);
    if (it == omega_.end()) throw std::invalid_argument("element is not of length zero");
    return static_cast<int>(it - omega_.begin());
}

std::pair<ExtWeylElt, ExtWeylElt> AffineWeylGroup::omega_decompose(const ExtWeylElt& a) const
{
    ExtWeylElt omega = reduce_to_omega(a, nullptr);
    return {mul(a, inv(omega)), omega};
}

int AffineWeylGroup::conj_simple_by_omega(const ExtWeylElt& omega, int i) const
{
    validate_index(i);
    if (length(omega) != 0) throw std::invalid_argument("conjugating element is not of length zero");
    const ExtWeylElt c = mul(mul(omega, simple_[i]), inv(omega));
    for (int j = 0; j <= rank(); ++j)
        if (simple_[j] == c) return j;
    throw std::logic_error("length-zero element does not permute simple reflections");
}

bool AffineWeylGroup::parabolic_is_finite(const std::vector<int>& subset) const
{
    std::set<int> s(subset.begin(), subset.end());
    for (int i : s) validate_index(i);
    return static_cast<int>(s.size()) <= rank();
}

std::vector<ExtWeylElt> AffineWeylGroup::parabolic_elements(const std::vector<int>& subset) const
{
    if (!parabolic_is_finite(subset)) throw std::invalid_argument("parabolic subgroup is infinite");
    std::set<ExtWeylElt> seen{identity()};
    std::deque<ExtWeylElt> queue{identity()};
    while (!queue.empty()) {
        ExtWeylElt x = queue.front();
        queue.pop_front();
        for (int i : subset) {
            ExtWeylElt y = mul(simple_[i], x);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

ExtWeylElt AffineWeylGroup::min_left_coset_rep(const ExtWeylElt& a, const std::vector<int>& q) const
{
    return min_double_coset_rep({}, a, q);
}

ExtWeylElt AffineWeylGroup::min_double_coset_rep(const std::vector<int>& p, const ExtWeylElt& a,
                                                 const std::vector<int>& q) const
{
    ExtWeylElt x = a;
    int len = length(x);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : p) {
            ExtWeylElt y = mul(simple_reflection(i), x);
            const int ly = length(y);
            if (ly < len) {
                x = std::move(y);
                len = ly;
                moved = true;
            }
        }
        for (int j : q) {
            ExtWeylElt y = mul(x, simple_reflection(j));
            const int ly = length(y);
            if (ly < len) {
                x = std::move(y);
                len = ly;
                moved = true;
            }
        }
    }
    return x;
}

std::vector<ExtWeylElt> AffineWeylGroup::elements_up_to_length(int max_length) const
{
    std::set<ExtWeylElt> waff{identity()};
    std::vector<ExtWeylElt> level{identity()};
    for (int len = 0; len < max_length; ++len) {
        std::vector<ExtWeylElt> next;
        for (const auto& x : level)
            for (int i = 0; i <= rank(); ++i) {
                ExtWeylElt y = mul(simple_[i], x);
                if (length(y) == len + 1 && waff.insert(y).second) next.push_back(std::move(y));
            }
        level = std::move(next);
    }
    std::vector<ExtWeylElt> out;
    for (const auto& x : waff)
        for (const auto& omega : omega_) out.push_back(mul(x, omega));
    sort_by_length(*this, out);
    return out;
}

std::vector<ExtWeylElt> AffineWeylGroup::double_cosets(const std::vector<int>& p, const std::vector<int>& q,
                                                       int max_length) const
{
    if (!parabolic_is_finite(p) || !parabolic_is_finite(q))
        throw std::invalid_argument("parabolic subgroup is infinite");
    std::set<ExtWeylElt> reps;
    for (const auto& x : elements_up_to_length(max_length)) reps.insert(min_double_coset_rep(p, x, q));
    std::vector<ExtWeylElt> out(reps.begin(), reps.end());
    sort_by_length(*this, out);
    return out;
}

bool AffineWeylGroup::bruhat_leq_waff(const ExtWeylElt& a, const ExtWeylElt& b) const
{
    const int la = length(a);
    const int lb = length(b);
    if (la > lb) return false;
    if (lb == 0) return a == b;
    int s = 0;
    while (!is_left_descent(b, s)) ++s;
    const ExtWeylElt sb = mul(simple_[s], b);
    const ExtWeylElt sa = mul(simple_[s], a);
    if (length(sa) < la) return bruhat_leq_waff(sa, sb);
    return bruhat_leq_waff(a, sb);
}

bool AffineWeylGroup::bruhat_leq(const ExtWeylElt& a, const ExtWeylElt& b) const
{
    auto [wa, oa] = omega_decompose(a);
    auto [wb, ob] = omega_decompose(b);
    if (oa != ob) return false;
    return bruhat_leq_waff(wa, wb);
}

void sort_by_length(const AffineWeylGroup& g, std::vector<ExtWeylElt>& elts)
{
    std::vector<std::pair<int, ExtWeylElt>> keyed;
    keyed.reserve(elts.size());
    for (auto& x : elts) keyed.emplace_back(g.length(x), std::move(x));
    std::sort(keyed.begin(), keyed.end());
    elts.clear();
    for (auto& [len, x] : keyed) elts.push_back(std::move(x));
}

}  // namespace dahakit
