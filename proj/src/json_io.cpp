#include "dahakit/json_io.hpp"

#include <string>

namespace dahakit {

namespace {

[[noreturn]] void fail(const std::string& what) { throw DecodeError(what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

long int_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<long>();
}

RationalVector rational_vector(const RootDatum& d, const Json& j, const char* what)
{
    if (!j.is_array() || static_cast<int>(j.size()) != d.rank())
        fail(std::string(what) + " must be an array of length " + std::to_string(d.rank()));
    RationalVector out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

Json rational_array(const RationalVector& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

std::vector<int> index_list(const Json& j, const char* what)
{
    if (!j.is_array()) fail(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) out.push_back(static_cast<int>(int_from_json(x, what)));
    return out;
}

}  // namespace

Json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("rational must be a string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

Json to_json(const FinWeight& x) { return rational_array(x.coords); }
Json to_json(const FinCoweight& y) { return rational_array(y.coords); }

FinWeight fin_weight_from_json(const RootDatum& d, const Json& j) { return FinWeight{rational_vector(d, j, "fin")}; }

FinCoweight fin_coweight_from_json(const RootDatum& d, const Json& j)
{
    return FinCoweight{rational_vector(d, j, "fin")};
}

Json to_json(const AffWeight& xi)
{
    return Json{{"c_lambda", to_json(xi.c_lambda)}, {"fin", to_json(xi.fin)}, {"c_delta", to_json(xi.c_delta)}};
}

Json to_json(const AffCoweight& eta)
{
    return Json{{"c_k", to_json(eta.c_k)}, {"fin", to_json(eta.fin)}, {"c_d", to_json(eta.c_d)}};
}

AffWeight aff_weight_from_json(const RootDatum& d, const Json& j)
{
    return AffWeight{rational_from_json(field(j, "c_lambda")), fin_weight_from_json(d, field(j, "fin")),
                     rational_from_json(field(j, "c_delta"))};
}

AffCoweight aff_coweight_from_json(const RootDatum& d, const Json& j)
{
    return AffCoweight{rational_from_json(field(j, "c_k")), fin_coweight_from_json(d, field(j, "fin")),
                       rational_from_json(field(j, "c_d"))};
}

Json to_json(const ExtWeylElt& a) { return Json{{"lambda", a.lambda}, {"w_perm", a.w.perm}}; }

ExtWeylElt ext_weyl_from_json(const AffineWeylGroup& g, const Json& j)
{
    if (j.is_object() && j.contains("word")) {
        CoxOmegaWord w;
        w.word = index_list(j["word"], "word");
        for (int i : w.word)
            if (i < 0 || i > g.rank()) fail("word letter out of range");
        if (j.contains("omega")) w.omega = static_cast<int>(int_from_json(j["omega"], "omega"));
        if (w.omega < 0 || w.omega >= static_cast<int>(g.omega_elements().size())) fail("omega id out of range");
        return g.evaluate(w);
    }
    ExtWeylElt a;
    const Json& lam = field(j, "lambda");
    if (!lam.is_array()) fail("lambda must be an array of integers");
    for (const auto& x : lam) a.lambda.push_back(int_from_json(x, "lambda entry"));
    // A bare lambda is a pure translation.
    a.w = j.contains("w_perm") ? WeylElt{index_list(j["w_perm"], "w_perm")} : g.datum().identity();
    try {
        g.check(a);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return a;
}

Json to_json(const CoxOmegaWord& w) { return Json{{"word", w.word}, {"omega", w.omega}}; }

Json to_json(const AffPoly& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (int v = 0; v < p.num_vars(); ++v) {
            if (m[v] == 0) continue;
            mono[v == p.u_var() ? std::string("u") : std::to_string(v)] = m[v];
        }
        out.push_back(Json{{"mono", mono}, {"coeff", to_json(c)}});
    }
    return out;
}

AffPoly aff_poly_from_json(const RootDatum& d, const Json& j)
{
    if (!j.is_array()) fail("polynomial must be an array of terms");
    AffPoly p(d.rank());
    for (const auto& term : j) {
        Monomial m(p.num_vars(), 0);
        const Json& mono = field(term, "mono");
        if (!mono.is_object()) fail("mono must be an object");
        for (const auto& [key, exp] : mono.items()) {
            int var = -1;
            if (key == "u") {
                var = p.u_var();
            } else {
                std::size_t used = 0;
                try {
                    var = std::stoi(key, &used);
                } catch (const std::exception&) {
                    fail("unknown monomial variable '" + key + "'");
                }
                if (used != key.size() || var < 0 || var > p.delta_var())
                    fail("unknown monomial variable '" + key + "'");
            }
            const long e = int_from_json(exp, "exponent");
            if (e < 0) fail("negative exponent");
            m[var] = static_cast<int>(e);
        }
        p.add_term(m, rational_from_json(field(term, "coeff")));
    }
    return p;
}

Json to_json(const DahaElt& a)
{
    Json out = Json::array();
    for (const auto& [w, p] : a.terms) out.push_back(Json{{"group", to_json(w)}, {"poly", to_json(p)}});
    return out;
}

DahaElt daha_from_json(const AffineWeylGroup& g, const Json& j)
{
    if (!j.is_array()) fail("DAHA element must be an array of terms");
    DahaElt a;
    for (const auto& term : j)
        a.add_term(ext_weyl_from_json(g, field(term, "group")), aff_poly_from_json(g.datum(), field(term, "poly")));
    return a;
}

Json to_json(const LeftNormalForm& a)
{
    Json out = Json::array();
    for (const auto& [w, p] : a.terms) out.push_back(Json{{"poly", to_json(p)}, {"group", to_json(w)}});
    return out;
}

Json to_json(const ParahoricType& p) { return p.subset; }

ParahoricType parahoric_from_json(const AffineWeylGroup& g, const Json& j)
{
    std::vector<int> subset = index_list(j, "parahoric subset");
    for (int i : subset)
        if (i < 0 || i > g.rank()) fail("parahoric index out of range");
    try {
        return make_parahoric(g, std::move(subset));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

Json to_json(const DCosetFn& f)
{
    Json support = Json::array();
    for (const auto& [w, c] : f.support) support.push_back(Json{{"rep", to_json(w)}, {"coeff", to_json(c)}});
    return Json{{"P", to_json(f.P)}, {"Q", to_json(f.Q)}, {"support", support}};
}

DCosetFn dcoset_from_json(const ConvolutionAlgebra& conv, const Json& j)
{
    const AffineWeylGroup& g = conv.group();
    DCosetFn f{parahoric_from_json(g, field(j, "P")), parahoric_from_json(g, field(j, "Q")), {}};
    const Json& support = field(j, "support");
    if (!support.is_array()) fail("support must be an array");
    for (const auto& entry : support) f.support[ext_weyl_from_json(g, field(entry, "rep"))] += rational_from_json(field(entry, "coeff"));
    return conv.canonicalize(f);
}

}  // namespace dahakit
