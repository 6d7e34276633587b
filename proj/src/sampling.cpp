#include "dahakit/sampling.hpp"

namespace dahakit {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Sampler::uniform(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::small_rational()
{
    Rational r(uniform(-3, 3));
    if (uniform(0, 4) == 0) r /= 2;
    return r;
}

FinWeight Sampler::fin_weight(const RootDatum& d)
{
    FinWeight x = d.zero_weight();
    for (auto& c : x.coords) c = small_rational();
    return x;
}

FinCoweight Sampler::fin_coweight(const RootDatum& d)
{
    FinCoweight y = d.zero_coweight();
    for (auto& c : y.coords) c = small_rational();
    return y;
}

AffWeight Sampler::aff_weight(const RootDatum& d)
{
    return AffWeight{small_rational(), fin_weight(d), small_rational()};
}

AffCoweight Sampler::aff_coweight(const RootDatum& d)
{
    return AffCoweight{small_rational(), fin_coweight(d), small_rational()};
}

IntVector Sampler::lattice_vector(const RootDatum& d, long bound)
{
    IntVector v(d.rank());
    for (auto& c : v) c = uniform(-bound, bound);
    return v;
}

WeylElt Sampler::weyl_elt(const RootDatum& d)
{
    WeylElt w = d.identity();
    const long steps = uniform(0, 2L * d.num_positive());
    for (long k = 0; k < steps; ++k) w = d.compose(w, d.simple_reflection(static_cast<int>(uniform(0, d.rank() - 1))));
    return w;
}

ExtWeylElt Sampler::ext_weyl(const AffineWeylGroup& g, int max_len)
{
    ExtWeylElt a = g.identity();
    const long steps = uniform(0, max_len);
    for (long k = 0; k < steps; ++k) a = g.mul(a, g.simple_reflection(static_cast<int>(uniform(0, g.rank()))));
    const auto& omega = g.omega_elements();
    return g.mul(a, omega[uniform(0, static_cast<long>(omega.size()) - 1)]);
}

AffPoly Sampler::linear_or_u(const RootDatum& d)
{
    if (uniform(0, 5) == 0) return AffPoly::u(d.rank());
    AffWeight xi = aff_weight(d);
    if (xi.is_zero()) xi.c_delta = 1;
    return AffPoly::linear(xi);
}

AffPoly Sampler::homogeneous_poly(const RootDatum& d, int degree)
{
    AffPoly p(d.rank());
    const long terms = uniform(1, 3);
    for (long t = 0; t < terms; ++t) {
        AffPoly term = AffPoly::constant(d.rank(), small_rational());
        for (int k = 0; k < degree; ++k) term = term * linear_or_u(d);
        p += term;
    }
    return p;
}

AffPoly Sampler::poly(const RootDatum& d, int max_degree)
{
    AffPoly p(d.rank());
    const long terms = uniform(1, 3);
    for (long t = 0; t < terms; ++t) p += homogeneous_poly(d, static_cast<int>(uniform(0, max_degree)));
    return p;
}

DahaElt Sampler::daha(const AffineWeylGroup& g, int max_len, int max_degree, int max_terms)
{
    DahaElt a;
    const long terms = uniform(1, max_terms);
    for (long t = 0; t < terms; ++t) a.add_term(ext_weyl(g, max_len), poly(g.datum(), max_degree));
    return a;
}

}  // namespace dahakit
