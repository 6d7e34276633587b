#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dahakit/convolution.hpp"
#include "oracle.hpp"

#include <memory>

using namespace dahakit;

namespace {

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;
using GroupAlgebra = std::map<ExtWeylElt, Rational>;

GroupPtr group(char t, int r, Flavor f = Flavor::simply_connected)
{
    return std::make_shared<const AffineWeylGroup>(RootDatum::build(t, r, f));
}

// Subgroup generated by the given simple reflections, by closure.
std::vector<ExtWeylElt> closure(const AffineWeylGroup& g, const std::vector<int>& gens)
{
    std::set<ExtWeylElt> seen{g.identity()};
    std::vector<ExtWeylElt> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<ExtWeylElt> next;
        for (const auto& x : frontier)
            for (int i : gens) {
                const ExtWeylElt y = g.mul(x, g.simple_reflection(i));
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

GroupAlgebra expand(const AffineWeylGroup& g, const DCosetFn& f)
{
    const auto wp = closure(g, f.P.subset), wq = closure(g, f.Q.subset);
    GroupAlgebra out;
    for (const auto& [x, c] : f.support)
        for (const auto& a : wp)
            for (const auto& b : wq) out[g.mul(a, g.mul(x, b))] = c;
    return out;
}

// f1 * f2 read off from the group algebra: the product of the expansions
// divided by #W_Q.
GroupAlgebra reference_product(const AffineWeylGroup& g, const DCosetFn& f1, const DCosetFn& f2)
{
    const GroupAlgebra a = expand(g, f1), b = expand(g, f2);
    const Rational wq(static_cast<long>(closure(g, f1.Q.subset).size()));
    GroupAlgebra out;
    for (const auto& [x, c] : a)
        for (const auto& [y, e] : b) out[g.mul(x, y)] += c * e / wq;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

DCosetFn random_fn(const ConvolutionAlgebra& conv, oracle::Gen& gen, const ParahoricType& p, const ParahoricType& q,
                   int max_len)
{
    const auto reps = conv.group().double_cosets(p.subset, q.subset, max_len);
    DCosetFn f = conv.zero(p, q);
    const long terms = gen.range(1, 3);
    for (long k = 0; k < terms; ++k) f = conv.add(f, conv.scale(gen.rational(), conv.indicator(p, q, gen.pick(reps))));
    return f;
}

void check_against_group_algebra(const ConvolutionAlgebra& conv, const DCosetFn& f1, const DCosetFn& f2)
{
    const AffineWeylGroup& g = conv.group();
    const DCosetFn prod = conv.convolve(f1, f2);
    const GroupAlgebra ref = reference_product(g, f1, f2);
    for (const auto& [m, c] : ref) CHECK(conv.value(prod, m) == c);
    for (const auto& [rep, c] : prod.support) {
        auto it = ref.find(rep);
        REQUIRE(it != ref.end());
        CHECK(it->second == c);
    }
}

}  // namespace

TEST_CASE("translations multiply as in the lattice")
{
    const auto g = group('A', 2);
    const ConvolutionAlgebra conv(g);
    const ParahoricType iw = make_parahoric(*g, {});
    oracle::Gen gen(41);
    for (int trial = 0; trial < 10; ++trial) {
        const IntVector l{gen.range(-2, 2), gen.range(-2, 2)}, m{gen.range(-2, 2), gen.range(-2, 2)};
        const IntVector lm{l[0] + m[0], l[1] + m[1]};
        CHECK(conv.convolve(conv.indicator(iw, iw, g->translation(l)), conv.indicator(iw, iw, g->translation(m))) ==
              conv.indicator(iw, iw, g->translation(lm)));
    }
}

TEST_CASE("units, zero and indicators")
{
    const auto g = group('A', 1);
    const ConvolutionAlgebra conv(g);
    const ParahoricType p1 = make_parahoric(*g, {1});
    for (const auto& p : enumerate_standard(g->datum())) {
        CHECK(conv.convolve(conv.unit(p), conv.unit(p)) == conv.unit(p));
        CHECK(conv.indicator(p, p, g->identity()) == conv.unit(p));
        const DCosetFn f = conv.indicator(p, p, g->simple_reflection(0));
        CHECK(conv.convolve(f, conv.zero(p, p)).is_zero());
    }
    const DCosetFn s0 = conv.indicator(p1, p1, g->simple_reflection(0));
    CHECK(s0.support.size() == 1);
    CHECK(s0.support.count(g->simple_reflection(0)) == 1);
    const ExtWeylElt& s1 = g->simple_reflection(1);
    CHECK(conv.indicator(p1, p1, g->mul(s1, g->mul(g->simple_reflection(0), s1))) == s0);

    // 1_{W s0 W} * 1_{W s0 W} = 1_{W s0 s1 s0 W} + 2 * 1_W.
    const ExtWeylElt s010 = g->mul(g->simple_reflection(0), g->mul(s1, g->simple_reflection(0)));
    CHECK(conv.convolve(s0, s0) == conv.add(conv.indicator(p1, p1, s010), conv.scale(2, conv.unit(p1))));
}

TEST_CASE("products match the group algebra")
{
    oracle::Gen gen(42);
    for (const auto& g : {group('A', 1), group('A', 1, Flavor::adjoint)}) {
        const ConvolutionAlgebra conv(g);
        const auto types = enumerate_standard(g->datum());
        for (const auto& p : types)
            for (const auto& q : types)
                for (const auto& r : types)
                    check_against_group_algebra(conv, random_fn(conv, gen, p, q, 4), random_fn(conv, gen, q, r, 4));
    }
    for (const auto& g : {group('A', 2), group('A', 2, Flavor::adjoint), group('B', 2)}) {
        const ConvolutionAlgebra conv(g);
        const auto types = enumerate_standard(g->datum());
        for (int trial = 0; trial < 25; ++trial) {
            const ParahoricType& p = gen.pick(types);
            const ParahoricType& q = gen.pick(types);
            const ParahoricType& r = gen.pick(types);
            check_against_group_algebra(conv, random_fn(conv, gen, p, q, 3), random_fn(conv, gen, q, r, 3));
        }
    }
}

TEST_CASE("associativity and unit laws")
{
    oracle::Gen gen(43);
    for (const auto& g : {group('A', 1), group('A', 2, Flavor::adjoint)}) {
        const ConvolutionAlgebra conv(g);
        const auto types = enumerate_standard(g->datum());
        for (int trial = 0; trial < 40; ++trial) {
            const ParahoricType &p = gen.pick(types), &q = gen.pick(types), &r = gen.pick(types), &s = gen.pick(types);
            const DCosetFn f1 = random_fn(conv, gen, p, q, 3), f2 = random_fn(conv, gen, q, r, 3),
                           f3 = random_fn(conv, gen, r, s, 3);
            CHECK(conv.convolve(conv.convolve(f1, f2), f3) == conv.convolve(f1, conv.convolve(f2, f3)));
            CHECK(conv.convolve(conv.unit(p), f1) == f1);
            CHECK(conv.convolve(f1, conv.unit(q)) == f1);
        }
    }
}

TEST_CASE("support length bound")
{
    // The naive bound l(f1) + l(f2) fails once the middle type is nontrivial.
    const auto g = group('A', 1);
    const ConvolutionAlgebra conv(g);
    const ParahoricType p1 = make_parahoric(*g, {1});
    const DCosetFn s0 = conv.indicator(p1, p1, g->simple_reflection(0));
    CHECK(conv.max_length(conv.convolve(s0, s0)) == 3);
    CHECK(conv.max_length(s0) + conv.max_length(s0) == 2);

    oracle::Gen gen(44);
    for (const auto& gg : {group('A', 1), group('A', 2)}) {
        const ConvolutionAlgebra c(gg);
        const auto types = enumerate_standard(gg->datum());
        for (int trial = 0; trial < 40; ++trial) {
            const ParahoricType &p = gen.pick(types), &q = gen.pick(types), &r = gen.pick(types);
            const DCosetFn f1 = random_fn(c, gen, p, q, 3), f2 = random_fn(c, gen, q, r, 3);
            const DCosetFn prod = c.convolve(f1, f2);
            if (prod.is_zero()) continue;
            int longest = 0;
            for (const auto& w : closure(*gg, q.subset)) longest = std::max(longest, gg->length(w));
            CHECK(c.max_length(prod) <= c.max_length(f1) + c.max_length(f2) + longest);
            if (q.subset.empty()) CHECK(c.max_length(prod) <= c.max_length(f1) + c.max_length(f2));
        }
    }
}

TEST_CASE("mismatched middle types are rejected")
{
    const auto g = group('A', 1);
    const ConvolutionAlgebra conv(g);
    const ParahoricType iw = make_parahoric(*g, {}), p1 = make_parahoric(*g, {1});
    CHECK_THROWS_AS(conv.convolve(conv.unit(iw), conv.unit(p1)), std::invalid_argument);
    CHECK_THROWS_AS(conv.unit(ParahoricType{{0, 1}}), std::invalid_argument);
}

TEST_CASE("parabolic orbits and the averaging map")
{
    const auto g = group('A', 1);
    const ConvolutionAlgebra conv(g);
    const ParahoricType iw = make_parahoric(*g, {}), p1 = make_parahoric(*g, {1}), p0 = make_parahoric(*g, {0});
    const FinCoweight a{{1}}, zero{{0}};
    CHECK(conv.parabolic_orbit(iw, a) == std::vector<FinCoweight>{a});
    CHECK(conv.parabolic_orbit(p1, a) == std::vector<FinCoweight>{FinCoweight{{-1}}, a});
    CHECK(conv.parabolic_orbit(p0, a) == std::vector<FinCoweight>{FinCoweight{{-1}}, a});

    const AvEmbedding e0 = conv.av_embed(p1, zero);
    CHECK(e0.indicator == conv.unit(p1));
    REQUIRE(e0.normalization.has_value());
    CHECK(*e0.normalization == 1);

    const AvEmbedding et = conv.av_embed(iw, a);
    CHECK(et.indicator == conv.indicator(iw, iw, g->translation(IntVector{1})));
    REQUIRE(et.normalization.has_value());
    CHECK(*et.normalization == 1);

    const AvEmbedding e1 = conv.av_embed(p1, a);
    CHECK(e1.indicator == conv.indicator(p1, p1, g->translation(IntVector{1})));
    REQUIRE(e1.normalization.has_value());
    CHECK(*e1.normalization == 1);

    for (const auto& p : {p0, p1})
        for (long l = -2; l <= 2; ++l)
            for (long m = -2; m <= 2; ++m) {
                const AvFit fit = conv.av_fit(p, FinCoweight{{l}}, FinCoweight{{m}});
                CHECK(fit.proportional);
                CHECK(fit.c == 1);
            }
}
