#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dahakit/sampling.hpp"
#include "dahakit/verify.hpp"
#include "oracle.hpp"

#include <memory>

using namespace dahakit;

namespace {

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

GroupPtr group(char t, int r, Flavor f = Flavor::simply_connected)
{
    return std::make_shared<const AffineWeylGroup>(RootDatum::build(t, r, f));
}

// Round trip through text, so the encoding really is plain JSON.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("rationals")
{
    CHECK(to_json(Rational(3, 4)) == "3/4");
    CHECK(to_json(Rational(-2)) == "-2");
    CHECK(rational_from_json(Json("6/8")) == Rational(3, 4));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), DecodeError);
    CHECK_THROWS_AS(rational_from_json(Json("x")), DecodeError);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), DecodeError);
    oracle::Gen gen(61);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational r = gen.rational() / Rational(gen.range(1, 7));
        CHECK(rational_from_json(reparse(to_json(r))) == r);
    }
}

TEST_CASE("weights, group elements, polynomials and DAHA elements round trip")
{
    for (const auto& g : {group('A', 2), group('B', 2, Flavor::adjoint), group('G', 2)}) {
        const RootDatum& d = g->datum();
        Sampler s(derive_seed(62, d.name()));
        for (int trial = 0; trial < 30; ++trial) {
            const AffWeight xi = s.aff_weight(d);
            CHECK(aff_weight_from_json(d, reparse(to_json(xi))) == xi);
            const AffCoweight eta = s.aff_coweight(d);
            CHECK(aff_coweight_from_json(d, reparse(to_json(eta))) == eta);
            const ExtWeylElt a = s.ext_weyl(*g, 6);
            CHECK(ext_weyl_from_json(*g, reparse(to_json(a))) == a);
            CHECK(ext_weyl_from_json(*g, reparse(to_json(g->reduced_word(a)))) == a);
            const AffPoly p = s.poly(d, 3);
            CHECK(aff_poly_from_json(d, reparse(to_json(p))) == p);
            const DahaElt h = s.daha(*g, 3, 2, 3);
            CHECK(daha_from_json(*g, reparse(to_json(h))) == h);
        }
    }
}

TEST_CASE("alternative group element encodings")
{
    const auto g = group('A', 1, Flavor::adjoint);
    CHECK(ext_weyl_from_json(*g, Json{{"lambda", {1}}}) == g->translation(IntVector{1}));
    CHECK(ext_weyl_from_json(*g, Json{{"word", {0, 1}}}) == g->mul(g->simple_reflection(0), g->simple_reflection(1)));
    CHECK(ext_weyl_from_json(*g, Json{{"word", Json::array()}, {"omega", 1}}) == g->omega_elements()[1]);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json{{"word", {2}}}), DecodeError);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json{{"word", {0}}, {"omega", 2}}), DecodeError);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json{{"lambda", {1, 2}}}), DecodeError);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json{{"lambda", {1}}, {"w_perm", {0, 0}}}), DecodeError);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json{{"lambda", {"a"}}}), DecodeError);
    CHECK_THROWS_AS(ext_weyl_from_json(*g, Json::array()), DecodeError);
}

TEST_CASE("malformed polynomials")
{
    const auto d = RootDatum::build('A', 1, Flavor::simply_connected);
    CHECK(aff_poly_from_json(*d, Json::parse(R"([{"mono": {"1": 2, "u": 1}, "coeff": "1/2"}])")) ==
          Rational(1, 2) * (AffPoly::variable(1, 1) * AffPoly::variable(1, 1) * AffPoly::u(1)));
    CHECK_THROWS_AS(aff_poly_from_json(*d, Json::parse(R"([{"mono": {"3": 1}, "coeff": "1"}])")), DecodeError);
    CHECK_THROWS_AS(aff_poly_from_json(*d, Json::parse(R"([{"mono": {"x": 1}, "coeff": "1"}])")), DecodeError);
    CHECK_THROWS_AS(aff_poly_from_json(*d, Json::parse(R"([{"mono": {"1": -1}, "coeff": "1"}])")), DecodeError);
    CHECK_THROWS_AS(aff_poly_from_json(*d, Json::parse(R"([{"mono": {}}])")), DecodeError);
    CHECK_THROWS_AS(aff_poly_from_json(*d, Json::parse(R"({"mono": {}})")), DecodeError);
}

TEST_CASE("double-coset functions")
{
    const auto g = group('A', 1);
    const ConvolutionAlgebra conv(g);
    const ParahoricType p1 = make_parahoric(*g, {1});
    const DCosetFn f = conv.add(conv.indicator(p1, p1, g->simple_reflection(0)), conv.scale(Rational(1, 3), conv.unit(p1)));
    CHECK(dcoset_from_json(conv, reparse(to_json(f))) == f);

    // Keys are canonicalized to min-length representatives on decode.
    const ExtWeylElt s1s0s1 = g->mul(g->simple_reflection(1), g->mul(g->simple_reflection(0), g->simple_reflection(1)));
    const Json j{{"P", {1}}, {"Q", {1}}, {"support", {{{"rep", to_json(s1s0s1)}, {"coeff", "2"}}}}};
    CHECK(dcoset_from_json(conv, j) == conv.scale(2, conv.indicator(p1, p1, g->simple_reflection(0))));
    CHECK_THROWS_AS(parahoric_from_json(*g, Json{0, 1}), DecodeError);
    CHECK_THROWS_AS(parahoric_from_json(*g, Json{5}), DecodeError);
}

TEST_CASE("seeds and samplers are deterministic")
{
    CHECK(derive_seed(1, "a") == derive_seed(1, "a"));
    CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
    CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
    const auto g = group('B', 2);
    Sampler s1(99), s2(99);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(s1.daha(*g, 3, 2, 2) == s2.daha(*g, 3, 2, 2));
        const long u = s1.uniform(-3, 5);
        CHECK(u == s2.uniform(-3, 5));
        CHECK((u >= -3 && u <= 5));
    }
}

TEST_CASE("type lists")
{
    const auto list = parse_type_list("A1..A3,B2:adj,C2:both,G2");
    REQUIRE(list.size() == 7);
    CHECK(list[0].name() == "A1");
    CHECK(list[2].name() == "A3");
    CHECK(list[3].flavor == Flavor::adjoint);
    CHECK(list[4].flavor == Flavor::simply_connected);
    CHECK(list[5].flavor == Flavor::adjoint);
    CHECK(list[6].type == 'G');
    CHECK_THROWS_AS(parse_type_list("A3..A1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_list("Q2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_list("A2:xyz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_list(""), std::invalid_argument);
}

TEST_CASE("verification reports")
{
    CHECK_THROWS_AS(run_suite("nope", std::nullopt, {}), std::invalid_argument);
    const auto types = parse_type_list("A1..A2:both");
    VerifyOptions opts;
    opts.seed = 5;
    const VerifyReport r1 = run_suite("kacact", types, opts);
    opts.threads = 1;
    const VerifyReport r2 = run_suite("kacact", types, opts);
    CHECK(r1.pass());
    CHECK(r1.to_json(false).dump() == r2.to_json(false).dump());
    const Json j = r1.to_json(false);
    CHECK(j["suite"] == "kacact");
    CHECK(j["pass"] == true);
    CHECK_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("samples"));
        CHECK(c.contains("seed"));
        CHECK_FALSE(c.contains("duration_s"));
    }
    CHECK(r1.to_json(true)["checks"][0].contains("duration_s"));

    opts.seed = 6;
    const VerifyReport r3 = run_suite("kacact", types, opts);
    CHECK(r3.to_json(false).dump() != r1.to_json(false).dump());
}
