#include "dahakit/afflattice.hpp"

#include <stdexcept>

namespace dahakit {

AffWeight& AffWeight::operator+=(const AffWeight& o)
{
    c_lambda += o.c_lambda;
    fin += o.fin;
    c_delta += o.c_delta;
    return *this;
}

AffWeight& AffWeight::operator-=(const AffWeight& o)
{
    c_lambda -= o.c_lambda;
    fin -= o.fin;
    c_delta -= o.c_delta;
    return *this;
}

AffWeight operator*(const Rational& c, AffWeight a)
{
    a.c_lambda *= c;
    a.fin = c * std::move(a.fin);
    a.c_delta *= c;
    return a;
}

AffCoweight& AffCoweight::operator+=(const AffCoweight& o)
{
    c_k += o.c_k;
    fin += o.fin;
    c_d += o.c_d;
    return *this;
}

AffCoweight& AffCoweight::operator-=(const AffCoweight& o)
{
    c_k -= o.c_k;
    fin -= o.fin;
    c_d -= o.c_d;
    return *this;
}

AffCoweight operator*(const Rational& c, AffCoweight a)
{
    a.c_k *= c;
    a.fin = c * std::move(a.fin);
    a.c_d *= c;
    return a;
}

AffWeight lambda_can(const RootDatum& d) { return {1, d.zero_weight(), 0}; }
AffWeight delta(const RootDatum& d) { return {0, d.zero_weight(), 1}; }
AffWeight embed(const FinWeight& x) { return {0, x, 0}; }
AffCoweight k_can(const RootDatum& d) { return {1, d.zero_coweight(), 0}; }
AffCoweight d_gen(const RootDatum& d) { return {0, d.zero_coweight(), 1}; }
AffCoweight embed(const FinCoweight& y) { return {0, y, 0}; }

AffWeight lambda_0(const RootDatum& d)
{
    return Rational(1, 2 * d.dual_coxeter_number()) * lambda_can(d);
}

AffCoweight k_normalized(const RootDatum& d)
{
    return Rational(2 * d.dual_coxeter_number()) * k_can(d);
}

Rational pair(const RootDatum& d, const AffWeight& xi, const AffCoweight& eta)
{
    return xi.c_lambda * eta.c_k + d.pair(xi.fin, eta.fin) + xi.c_delta * eta.c_d;
}

AffWeight affine_simple_root(const RootDatum& d, int i)
{
    if (i < 0 || i > d.rank()) throw std::out_of_range("affine simple root index out of range");
    if (i == 0) return delta(d) - embed(d.highest_root().first);
    return embed(d.simple_root(i - 1));
}

AffCoweight affine_simple_coroot(const RootDatum& d, int i)
{
    if (i < 0 || i > d.rank()) throw std::out_of_range("affine simple coroot index out of range");
    if (i == 0) return k_normalized(d) - embed(d.highest_root().second);
    return embed(d.simple_coroot(i - 1));
}

FinWeight star(const RootDatum& d, const FinCoweight& lambda)
{
    if (static_cast<int>(lambda.coords.size()) != d.rank())
        throw std::invalid_argument("coweight does not belong to this root datum");
    return FinWeight{multiply(d.star_matrix(), lambda.coords)};
}

IntMatrix affine_cartan_matrix(const RootDatum& d)
{
    const int n = d.rank();
    IntMatrix m(n + 1, IntVector(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            m[i][j] = pair(d, affine_simple_root(d, i), affine_simple_coroot(d, j)).get_num().get_si();
    return m;
}

}  // namespace dahakit
