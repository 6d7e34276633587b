#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dahakit/parahoric.hpp"
#include "oracle.hpp"

#include <memory>

using namespace dahakit;

namespace {

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

GroupPtr group(char t, int r, Flavor f = Flavor::simply_connected)
{
    return std::make_shared<const AffineWeylGroup>(RootDatum::build(t, r, f));
}

// Size of the subgroup generated by the given simple reflections, or -1 once
// it exceeds `cap`.
long closure_size(const AffineWeylGroup& g, const std::vector<int>& gens, long cap)
{
    std::set<ExtWeylElt> seen{g.identity()};
    std::vector<ExtWeylElt> frontier{g.identity()};
    while (!frontier.empty()) {
        std::vector<ExtWeylElt> next;
        for (const auto& x : frontier)
            for (int i : gens) {
                const ExtWeylElt y = g.mul(x, g.simple_reflection(i));
                if (seen.insert(y).second) {
                    if (static_cast<long>(seen.size()) > cap) return -1;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("counts of standard parahoric types")
{
    const auto a1 = RootDatum::build('A', 1, Flavor::simply_connected);
    const auto types = enumerate_standard(*a1);
    CHECK(types == std::vector<ParahoricType>{{{}}, {{0}}, {{1}}});

    // SL(n) has 2^n - 1 types, Sp(2n) and SO(2n+1) have 2^{n+1} - 1.
    for (int n = 2; n <= 6; ++n)
        CHECK(enumerate_standard(*RootDatum::build('A', n - 1, Flavor::simply_connected)).size() == (1u << n) - 1);
    for (int n = 2; n <= 5; ++n)
        for (char t : {'B', 'C'})
            CHECK(enumerate_standard(*RootDatum::build(t, n, Flavor::simply_connected)).size() == (1u << (n + 1)) - 1);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'D', 4}, {'F', 4}, {'G', 2}, {'E', 6}})
        CHECK(enumerate_standard(*RootDatum::build(t, r, Flavor::adjoint)).size() == (1u << (r + 1)) - 1);
}

TEST_CASE("enumeration agrees with brute-force finiteness")
{
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'G', 2}}) {
        const auto g = group(t, r);
        std::vector<ParahoricType> expect;
        for (unsigned mask = 0; mask < (1u << (r + 1)); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i <= r; ++i)
                if (mask & (1u << i)) subset.push_back(i);
            if (closure_size(*g, subset, 2000) > 0) expect.push_back(ParahoricType{subset});
        }
        auto lib = enumerate_standard(g->datum());
        std::sort(expect.begin(), expect.end());
        std::sort(lib.begin(), lib.end());
        CHECK(lib == expect);
    }
}

TEST_CASE("classical index anchors")
{
    const auto a1 = RootDatum::build('A', 1, Flavor::simply_connected);
    CHECK(to_classical_index(*a1, ParahoricType{{}}) == std::vector<int>{0, 1});
    for (int n = 2; n <= 6; ++n) {
        const auto d = RootDatum::build('A', n - 1, Flavor::simply_connected);
        std::vector<int> all;
        for (int i = 1; i < n; ++i) all.push_back(i);
        CHECK(to_classical_index(*d, ParahoricType{all}) == std::vector<int>{0});
    }
}

TEST_CASE("classical index round trips")
{
    std::vector<RootDatumPtr> data;
    for (int n = 1; n <= 5; ++n) data.push_back(RootDatum::build('A', n, Flavor::simply_connected));
    for (int n = 2; n <= 5; ++n) {
        data.push_back(RootDatum::build('B', n, Flavor::simply_connected));
        data.push_back(RootDatum::build('C', n, Flavor::simply_connected));
    }
    for (const auto& d : data) {
        std::set<std::vector<int>> seen;
        for (const auto& p : enumerate_standard(*d)) {
            const auto index = to_classical_index(*d, p);
            CHECK(from_classical_index(*d, index) == p);
            CHECK(seen.insert(index).second);
            CHECK(index.size() == static_cast<std::size_t>(d->rank() + 1) - p.subset.size());
            for (int i : index) CHECK_FALSE(std::binary_search(p.subset.begin(), p.subset.end(), i));
        }
    }
}

TEST_CASE("classical index errors")
{
    const auto d4 = RootDatum::build('D', 4, Flavor::simply_connected);
    CHECK_FALSE(has_classical_index(*d4));
    CHECK_THROWS_AS(to_classical_index(*d4, ParahoricType{{}}), std::invalid_argument);
    const auto a2 = RootDatum::build('A', 2, Flavor::simply_connected);
    CHECK_THROWS_AS(from_classical_index(*a2, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_classical_index(*a2, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(from_classical_index(*a2, {0, 3}), std::invalid_argument);
}

TEST_CASE("make_parahoric normalizes and validates")
{
    const auto g = group('A', 2);
    CHECK(make_parahoric(*g, {2, 0, 2}) == ParahoricType{{0, 2}});
    CHECK_THROWS_AS(make_parahoric(*g, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_parahoric(*g, {3}), std::invalid_argument);
}

TEST_CASE("Levi Weyl groups")
{
    const auto a1 = group('A', 1);
    CHECK(levi_weyl_group(*a1, ParahoricType{{}}) == std::vector<ExtWeylElt>{a1->identity()});
    const auto w1 = levi_weyl_group(*a1, ParahoricType{{1}});
    CHECK(std::set<ExtWeylElt>(w1.begin(), w1.end()) == std::set<ExtWeylElt>{a1->identity(), a1->simple_reflection(1)});
    CHECK(levi_weyl_group(*group('A', 2), ParahoricType{{1, 2}}).size() == 6);

    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}, {'D', 4}}) {
        const auto g = group(t, r);
        const RootDatum& d = g->datum();
        for (const auto& p : enumerate_standard(d)) {
            const auto elts = levi_weyl_group(*g, p);
            CHECK(static_cast<long>(elts.size()) == subdiagram_weyl_order(d, p));
            if (elts.size() <= 400) CHECK(closure_size(*g, p.subset, 400) == static_cast<long>(elts.size()));
            const std::set<ExtWeylElt> set(elts.begin(), elts.end());
            if (elts.size() > 200) continue;
            for (const auto& a : elts) {
                CHECK(g->act_on_weight(a, delta(d)) == delta(d));
                for (const auto& b : elts) CHECK(set.count(g->mul(a, b)) == 1);
            }
        }
    }
    CHECK(weyl_group_order('E', 8) == 696729600L);
    CHECK(weyl_group_order('F', 4) == 1152);
    CHECK(weyl_group_order('D', 4) == 192);
}

TEST_CASE("W_P orbits of weights are finite")
{
    oracle::Gen gen(51);
    const auto g = group('B', 3);
    const RootDatum& d = g->datum();
    for (const auto& p : enumerate_standard(d)) {
        const auto elts = levi_weyl_group(*g, p);
        if (elts.size() > 100) continue;
        AffWeight xi{gen.rational(), d.zero_weight(), gen.rational()};
        for (auto& c : xi.fin.coords) c = gen.rational();
        std::vector<AffWeight> orbit{xi};
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (int i : p.subset) {
                const AffWeight y = g->act_on_weight(g->simple_reflection(i), orbit[k]);
                if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
            }
        CHECK(orbit.size() <= elts.size());
        CHECK(elts.size() % orbit.size() == 0);
    }
}
