#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dahakit/rootsys.hpp"
#include "oracle.hpp"

using namespace dahakit;

namespace {

FinCoweight cw(std::initializer_list<long> v)
{
    FinCoweight y;
    for (long x : v) y.coords.emplace_back(x);
    return y;
}

RootDatumPtr sc(char t, int r) { return RootDatum::build(t, r, Flavor::simply_connected); }

}  // namespace

TEST_CASE("root counts")
{
    CHECK(sc('A', 1)->num_roots() == 2);
    CHECK(sc('A', 2)->num_roots() == 6);
    CHECK(sc('G', 2)->num_roots() == 12);
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        CAPTURE(r);
        const auto d = sc(t, r);
        CHECK(d->num_roots() == oracle::known_root_count(t, r));
        CHECK(d->num_positive() * 2 == d->num_roots());
    }
}

TEST_CASE("Cartan matrix and positive roots match the Euclidean realization")
{
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        CAPTURE(r);
        const auto d = sc(t, r);
        const auto rs = oracle::root_system(t, r);
        CHECK(d->cartan() == rs.cartan);
        std::set<IntVector> lib;
        for (int k = 0; k < d->num_positive(); ++k) lib.insert(d->root(k));
        CHECK(lib == std::set<IntVector>(rs.positive.begin(), rs.positive.end()));
        for (int i = 0; i < r; ++i) {
            IntVector e(r, 0);
            e[i] = 1;
            CHECK(d->root(i) == e);
        }
    }
}

TEST_CASE("root list conventions")
{
    const auto d = sc('B', 3);
    for (int k = 0; k < d->num_roots(); ++k) {
        const IntVector& r = d->root(k);
        IntVector neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        CHECK(d->root(d->negate(k)) == neg);
        CHECK(d->root_index(r) == k);
        CHECK(d->pair_root(k, d->coroot_vector(k)) == 2);
    }
    CHECK_FALSE(d->root_index(IntVector{5, 5, 5}).has_value());
}

TEST_CASE("Killing form examples")
{
    const auto a1 = sc('A', 1);
    CHECK(a1->killing_form(cw({1}), cw({1})) == 8);
    CHECK(a1->killing_form(cw({1}), cw({0})) == 0);
    const auto a2 = sc('A', 2);
    const auto theta_dual = a2->highest_root().second;
    CHECK(a2->killing_form(theta_dual, theta_dual) == 12);
}

TEST_CASE("Killing form agrees with direct summation")
{
    oracle::Gen gen(7);
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        const auto d = sc(t, r);
        const auto rs = oracle::root_system(t, r);
        for (int trial = 0; trial < 10; ++trial) {
            FinCoweight x, y;
            for (int i = 0; i < r; ++i) {
                x.coords.push_back(gen.rational());
                y.coords.push_back(gen.rational());
            }
            CHECK(d->killing_form(x, y) == rs.killing(x.coords, y.coords));
            CHECK(d->killing_form(x, y) == d->killing_form(y, x));
        }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                CHECK(d->killing_gram()[i][j] == rs.killing(oracle::unit(r, i), oracle::unit(r, j)));
    }
}

TEST_CASE("highest root examples")
{
    CHECK(sc('A', 1)->highest_root().first.coords == RationalVector{1});
    CHECK(sc('A', 2)->highest_root().first.coords == RationalVector{1, 1});
    CHECK(sc('C', 2)->highest_root().first.coords == RationalVector{2, 1});
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        CAPTURE(r);
        const auto d = sc(t, r);
        const auto rs = oracle::root_system(t, r);
        const auto [theta, theta_dual] = d->highest_root();
        RationalVector expect(rs.theta.begin(), rs.theta.end());
        CHECK(theta.coords == expect);
        CHECK(theta_dual.coords == rs.theta_dual);
        CHECK(d->theta_marks() == rs.theta);
    }
}

TEST_CASE("dual Coxeter numbers")
{
    CHECK(sc('A', 1)->dual_coxeter_number() == 2);
    CHECK(sc('G', 2)->dual_coxeter_number() == 4);
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        CAPTURE(r);
        const auto d = sc(t, r);
        CHECK(d->dual_coxeter_number() == oracle::known_dual_coxeter(t, r));
        CHECK(d->dual_coxeter_number() == oracle::root_system(t, r).h_dual);
    }
}

TEST_CASE("rho")
{
    CHECK(sc('A', 1)->rho().coords == RationalVector{Rational(1, 2)});
    CHECK(sc('A', 2)->rho().coords == RationalVector{1, 1});
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        const auto d = sc(t, r);
        CHECK(d->rho().coords == oracle::root_system(t, r).rho);
        for (int i = 0; i < r; ++i) CHECK(d->pair(d->rho(), d->simple_coroot(i)) == 1);
    }
}

TEST_CASE("dual Coxeter identity on the Killing form")
{
    for (const auto& [t, r] : oracle::all_small_types()) {
        CAPTURE(std::string(1, t));
        CAPTURE(r);
        const auto d = sc(t, r);
        const auto theta_dual = d->highest_root().second;
        const Rational half = d->killing_form(theta_dual, theta_dual) / 2;
        CHECK(half == 2 * (d->pair(d->rho(), theta_dual) + 1));
        CHECK(half == 2 * d->dual_coxeter_number());
    }
}

TEST_CASE("Weyl orbits")
{
    const auto a1 = sc('A', 1);
    CHECK(a1->weyl_orbit(cw({0})).size() == 1);
    CHECK(a1->weyl_orbit(cw({1})) == std::vector<FinCoweight>{cw({-1}), cw({1})});
    const auto a2 = sc('A', 2);
    CHECK(a2->weyl_orbit(cw({1, 0})).size() == 6);

    // Closure under every simple reflection and size dividing |W|.
    oracle::Gen gen(11);
    for (const auto& [t, r] : std::vector<oracle::TypeRank>{{'A', 3}, {'B', 3}, {'G', 2}, {'C', 3}}) {
        const auto d = sc(t, r);
        const auto elements = d->weyl_group_elements();
        for (int trial = 0; trial < 5; ++trial) {
            FinCoweight y;
            for (int i = 0; i < r; ++i) y.coords.emplace_back(gen.range(-2, 2));
            const auto orbit = d->weyl_orbit(y);
            const std::set<FinCoweight> set(orbit.begin(), orbit.end());
            for (const auto& x : orbit)
                for (int i = 0; i < r; ++i) CHECK(set.count(d->apply(d->simple_reflection(i), x)) == 1);
            CHECK(elements.size() % orbit.size() == 0);
        }
    }
}

TEST_CASE("Weyl group law and lengths")
{
    const auto d = sc('B', 3);
    const auto elements = d->weyl_group_elements();
    CHECK(elements.size() == 48);
    oracle::Gen gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const WeylElt& a = gen.pick(elements);
        const WeylElt& b = gen.pick(elements);
        FinCoweight y;
        for (int i = 0; i < 3; ++i) y.coords.push_back(gen.rational());
        CHECK(d->apply(d->compose(a, b), y) == d->apply(a, d->apply(b, y)));
        CHECK(d->compose(a, d->inverse(a)) == d->identity());
        CHECK(d->length(d->compose(a, b)) <= d->length(a) + d->length(b));
    }
    int longest = 0;
    for (const auto& w : elements) longest = std::max(longest, d->length(w));
    CHECK(longest == d->num_positive());
}

TEST_CASE("invalid root data are rejected")
{
    CHECK_THROWS_AS(RootDatum::build('A', 0, Flavor::simply_connected), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::build('B', 1, Flavor::simply_connected), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::build('D', 3, Flavor::simply_connected), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::build('E', 5, Flavor::simply_connected), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::build('G', 3, Flavor::simply_connected), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::build('X', 2, Flavor::simply_connected), std::invalid_argument);
}

TEST_CASE("lattices")
{
    const auto sc_a1 = sc('A', 1);
    const auto ad_a1 = RootDatum::build('A', 1, Flavor::adjoint);
    FinCoweight half;
    half.coords = {Rational(1, 2)};
    CHECK_FALSE(sc_a1->in_cochar_lattice(half));
    CHECK(ad_a1->in_cochar_lattice(half));
    CHECK(ad_a1->cochar_lattice_coords(half) == IntVector{1});
    CHECK(ad_a1->from_cochar_lattice_coords(IntVector{1}) == half);

    // Adjoint cocharacters are the coweights: pairing with every root is integral.
    const auto ad_b3 = RootDatum::build('B', 3, Flavor::adjoint);
    for (const auto& row : ad_b3->cochar_lattice_basis()) {
        FinCoweight y{row};
        for (int k = 0; k < ad_b3->num_roots(); ++k) CHECK(is_integer(ad_b3->pair_root(k, y)));
    }
}
