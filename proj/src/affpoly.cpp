#include "dahakit/affpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace dahakit {

AffPoly AffPoly::constant(int rank, const Rational& c)
{
    AffPoly p(rank);
    p.add_term(Monomial(rank + 3, 0), c);
    return p;
}

AffPoly AffPoly::linear(const AffWeight& xi)
{
    const int rank = static_cast<int>(xi.fin.coords.size());
    AffPoly p(rank);
    Monomial m(rank + 3, 0);
    auto put = [&](int var, const Rational& c) {
        m[var] = 1;
        p.add_term(m, c);
        m[var] = 0;
    };
    put(0, xi.c_lambda);
    for (int i = 0; i < rank; ++i) put(i + 1, xi.fin.coords[i]);
    put(rank + 1, xi.c_delta);
    return p;
}

AffPoly AffPoly::u(int rank) { return variable(rank, rank + 2); }

AffPoly AffPoly::variable(int rank, int var)
{
    if (var < 0 || var >= rank + 3) throw std::out_of_range("polynomial variable out of range");
    AffPoly p(rank);
    Monomial m(rank + 3, 0);
    m[var] = 1;
    p.add_term(m, 1);
    return p;
}

void AffPoly::add_term(const Monomial& m, const Rational& c)
{
    if (static_cast<int>(m.size()) != num_vars()) throw std::invalid_argument("monomial has wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational AffPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int AffPoly::total_degree() const
{
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
    return deg;
}

bool AffPoly::is_homogeneous() const
{
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        const int d = std::accumulate(m.begin(), m.end(), 0);
        if (deg >= 0 && d != deg) return false;
        deg = d;
    }
    return true;
}

void AffPoly::check_compatible(const AffPoly& o) const
{
    if (o.rank_ != rank_) throw std::invalid_argument("polynomials from different root data");
}

AffPoly& AffPoly::operator+=(const AffPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AffPoly& AffPoly::operator-=(const AffPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AffPoly& AffPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

AffPoly operator*(const AffPoly& a, const AffPoly& b)
{
    a.check_compatible(b);
    AffPoly out(a.rank_);
    Monomial m(a.num_vars());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
            out.add_term(m, ca * cb);
        }
    return out;
}

namespace {

using TermIt = std::map<Monomial, Rational>::const_iterator;

// Nested Horner evaluation over a lexicographically sorted run of terms that
// agree in the variables before v.
AffPoly substitute_run(TermIt begin, TermIt end, int v, const std::vector<AffPoly>& images, int rank)
{
    AffPoly out(rank);
    if (v == static_cast<int>(images.size())) {
        // Only the exponent of u is left.
        for (auto it = begin; it != end; ++it) {
            Monomial um(it->first.size(), 0);
            um[v] = it->first[v];
            out.add_term(um, it->second);
        }
        return out;
    }
    // Runs with equal exponent of v are contiguous and ascending.
    std::vector<std::pair<int, std::pair<TermIt, TermIt>>> runs;
    for (auto it = begin; it != end;) {
        auto stop = it;
        while (stop != end && stop->first[v] == it->first[v]) ++stop;
        runs.push_back({it->first[v], {it, stop}});
        it = stop;
    }
    int k = runs.back().first;
    for (auto r = runs.rbegin(); r != runs.rend(); ++r) {
        while (k > r->first) {
            out = out * images[v];
            --k;
        }
        out += substitute_run(r->second.first, r->second.second, v + 1, images, rank);
    }
    while (k > 0) {
        out = out * images[v];
        --k;
    }
    return out;
}

}  // namespace

AffPoly AffPoly::substitute(const std::vector<AffPoly>& images) const
{
    const int nsub = rank_ + 2;
    if (static_cast<int>(images.size()) != nsub) throw std::invalid_argument("wrong number of substitution images");
    if (terms_.empty()) return AffPoly(rank_);
    return substitute_run(terms_.begin(), terms_.end(), 0, images, rank_);
}

AffPoly act_on_poly(const AffineWeylGroup& g, const ExtWeylElt& a, const AffPoly& p)
{
    std::vector<AffPoly> images;
    for (const auto& xi : g.weight_basis_images(a)) images.push_back(AffPoly::linear(xi));
    return p.substitute(images);
}

AffPoly divide_by_linear(const AffPoly& p, const AffWeight& form)
{
    const AffPoly lin = AffPoly::linear(form);
    const int rank = p.rank();
    if (lin.rank() != rank) throw std::invalid_argument("polynomials from different root data");
    if (lin.is_zero()) throw std::domain_error("division by the zero form");

    // Pivot on the last variable with a nonzero coefficient; write
    // form = a * x + r and p = sum_k p_k x^k.
    int pivot = -1;
    Rational a;
    for (const auto& [m, c] : lin.terms()) {
        for (int v = 0; v < lin.num_vars(); ++v)
            if (m[v] == 1 && v > pivot) {
                pivot = v;
                a = c;
            }
    }
    AffPoly r = lin - a * AffPoly::variable(rank, pivot);

    int top = -1;
    for (const auto& [m, c] : p.terms()) top = std::max(top, m[pivot]);
    if (top < 0) return AffPoly(rank);
    std::vector<AffPoly> coeff(top + 1, AffPoly(rank));
    for (const auto& [m, c] : p.terms()) {
        Monomial stripped = m;
        stripped[pivot] = 0;
        coeff[m[pivot]].add_term(stripped, c);
    }

    // q_{k-1} = (p_k - r q_k) / a, from the top down; remainder p_0 - r q_0.
    std::vector<AffPoly> q(std::max(top, 1), AffPoly(rank));
    const Rational inv_a = 1 / a;
    AffPoly carry(rank);
    for (int k = top; k >= 1; --k) {
        AffPoly numer = coeff[k] - r * carry;
        q[k - 1] = inv_a * numer;
        carry = q[k - 1];
    }
    AffPoly remainder = coeff[0] - r * carry;
    if (!remainder.is_zero()) throw std::logic_error("polynomial is not divisible by the linear form");

    AffPoly out(rank);
    for (int k = 0; k < top; ++k) {
        for (const auto& [m, c] : q[k].terms()) {
            Monomial mk = m;
            mk[pivot] = k;
            out.add_term(mk, c);
        }
    }
    return out;
}

AffPoly drop_u_and_delta(const AffPoly& p)
{
    AffPoly out(p.rank());
    for (const auto& [m, c] : p.terms())
        if (m[p.u_var()] == 0 && m[p.delta_var()] == 0) out.add_term(m, c);
    return out;
}

}  // namespace dahakit
