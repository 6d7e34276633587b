#include "dahakit/daha.hpp"

#include "dahakit/polyrep.hpp"

#include <numeric>
#include <stdexcept>

namespace dahakit {

void DahaElt::add_term(const ExtWeylElt& w, const AffPoly& p)
{
    if (p.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
}

DahaElt& DahaElt::operator+=(const DahaElt& o)
{
    for (const auto& [w, p] : o.terms) add_term(w, p);
    return *this;
}

DahaElt& DahaElt::operator-=(const DahaElt& o)
{
    for (const auto& [w, p] : o.terms) add_term(w, Rational(-1) * p);
    return *this;
}

DahaElt operator*(const Rational& c, DahaElt a)
{
    if (c == 0) return {};
    for (auto& [w, p] : a.terms) p *= c;
    return a;
}

Daha::Daha(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

DahaElt Daha::one() const { return element(group_->identity()); }

DahaElt Daha::element(const ExtWeylElt& w) const
{
    DahaElt a;
    a.add_term(w, AffPoly::constant(rank(), 1));
    return a;
}

DahaElt Daha::reflection(int i) const { return element(group_->simple_reflection(i)); }

DahaElt Daha::poly(const AffPoly& p) const
{
    if (p.rank() != rank()) throw std::invalid_argument("polynomial from a different root datum");
    DahaElt a;
    a.add_term(group_->identity(), p);
    return a;
}

DahaElt Daha::weight(const AffWeight& xi) const { return poly(AffPoly::linear(xi)); }

DahaElt Daha::u() const { return poly(AffPoly::u(rank())); }

DahaElt Daha::straighten_simple(int i, const AffPoly& p) const
{
    const AffineWeylGroup& g = *group_;
    const ExtWeylElt& s = g.simple_reflection(i);
    DahaElt out;
    out.add_term(s, act_on_poly(g, s, p));
    out.add_term(g.identity(), AffPoly::u(rank()) * divided_difference(g, i, p));
    return out;
}

DahaElt Daha::move_right(const AffPoly& p, const ExtWeylElt& w) const
{
    const AffineWeylGroup& g = *group_;
    const CoxOmegaWord word = g.reduced_word(w);
    DahaElt state;
    state.add_term(g.identity(), p);
    for (int j : word.word) {
        DahaElt next;
        for (const auto& [v, q] : state.terms) {
            // v q s_j = v s_j (s_j q) + v u Delta_j(q)
            const DahaElt moved = straighten_simple(j, q);
            for (const auto& [x, r] : moved.terms) next.add_term(g.mul(v, x), r);
        }
        state = std::move(next);
    }
    const ExtWeylElt& omega = g.omega_elements()[word.omega];
    if (word.omega == 0) return state;
    // q omega = omega (omega^{-1} q)
    const ExtWeylElt omega_inv = g.inv(omega);
    DahaElt out;
    for (const auto& [v, q] : state.terms) out.add_term(g.mul(v, omega), act_on_poly(g, omega_inv, q));
    return out;
}

DahaElt Daha::mul(const DahaElt& a, const DahaElt& b) const
{
    const AffineWeylGroup& g = *group_;
    DahaElt out;
    for (const auto& [w1, p1] : a.terms) {
        if (p1.rank() != rank()) throw std::invalid_argument("element from a different root datum");
        for (const auto& [w2, p2] : b.terms) {
            if (p2.rank() != rank()) throw std::invalid_argument("element from a different root datum");
            const DahaElt middle = move_right(p1, w2);
            for (const auto& [v, q] : middle.terms) out.add_term(g.mul(w1, v), q * p2);
        }
    }
    return out;
}

LeftNormalForm Daha::to_left_form(const DahaElt& a) const
{
    const AffineWeylGroup& g = *group_;
    LeftNormalForm out;
    auto add = [](std::map<ExtWeylElt, AffPoly>& m, const ExtWeylElt& w, const AffPoly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = m.emplace(w, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    for (const auto& [w, q] : a.terms) {
        const CoxOmegaWord word = g.reduced_word(w);
        const ExtWeylElt& omega = g.omega_elements()[word.omega];
        std::map<ExtWeylElt, AffPoly> state;
        add(state, omega, act_on_poly(g, omega, q));
        for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) {
            const int i = *it;
            const ExtWeylElt& s = g.simple_reflection(i);
            std::map<ExtWeylElt, AffPoly> next;
            for (const auto& [v, r] : state) {
                // s_i r v = (s_i r) s_i v + u Delta_i(r) v
                add(next, g.mul(s, v), act_on_poly(g, s, r));
                add(next, v, AffPoly::u(rank()) * divided_difference(g, i, r));
            }
            state = std::move(next);
        }
        for (const auto& [v, r] : state) add(out.terms, v, r);
    }
    return out;
}

DahaDegree Daha::degree(const DahaElt& a) const
{
    DahaDegree d;
    if (a.is_zero()) {
        d.zero = true;
        return d;
    }
    int lo = -1;
    int hi = -1;
    for (const auto& [w, p] : a.terms)
        for (const auto& [m, c] : p.terms()) {
            const int deg = 2 * std::accumulate(m.begin(), m.end(), 0);
            lo = lo < 0 ? deg : std::min(lo, deg);
            hi = std::max(hi, deg);
        }
    d.max_degree = hi;
    d.homogeneous = lo == hi;
    return d;
}

DahaElt Daha::idempotent(const ParahoricType& p) const
{
    const auto elements = levi_weyl_group(*group_, p);
    const Rational weight(1, static_cast<long>(elements.size()));
    DahaElt e;
    for (const auto& w : elements) e.add_term(w, AffPoly::constant(rank(), weight));
    return e;
}

DahaElt Daha::sandwich(const ParahoricType& p, const DahaElt& a) const
{
    const DahaElt e = idempotent(p);
    return mul(mul(e, a), e);
}

DahaElt Daha::specialize_degenerate(const DahaElt& a) const
{
    DahaElt out;
    for (const auto& [w, p] : a.terms) out.add_term(w, drop_u_and_delta(p));
    return out;
}

}  // namespace dahakit
