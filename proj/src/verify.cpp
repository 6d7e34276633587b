#include "dahakit/verify.hpp"

#include "dahakit/polyrep.hpp"
#include "dahakit/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace dahakit {

std::string DatumSpec::name() const
{
    std::string s(1, type);
    s += std::to_string(rank);
    if (flavor == Flavor::adjoint) s += ":adj";
    return s;
}

std::vector<DatumSpec> parse_type_list(const std::string& text)
{
    auto parse_one = [](const std::string& tok, std::size_t& pos) {
        if (pos >= tok.size() || !std::isupper(static_cast<unsigned char>(tok[pos])))
            throw std::invalid_argument("bad type token '" + tok + "'");
        const char letter = tok[pos++];
        const std::size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("missing rank in '" + tok + "'");
        return std::pair<char, int>(letter, std::stoi(tok.substr(start, pos - start)));
    };

    std::vector<DatumSpec> out;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find(',', begin);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(begin, end - begin);
        begin = end + 1;
        if (tok.empty()) {
            if (end == text.size()) break;
            throw std::invalid_argument("empty entry in type list");
        }

        std::vector<Flavor> flavors{Flavor::simply_connected};
        if (auto colon = tok.find(':'); colon != std::string::npos) {
            const std::string suffix = tok.substr(colon + 1);
            tok = tok.substr(0, colon);
            if (suffix == "adj") flavors = {Flavor::adjoint};
            else if (suffix == "both") flavors = {Flavor::simply_connected, Flavor::adjoint};
            else if (suffix != "sc") throw std::invalid_argument("unknown flavor suffix '" + suffix + "'");
        }

        std::size_t pos = 0;
        auto [letter, lo] = parse_one(tok, pos);
        int hi = lo;
        if (pos < tok.size()) {
            if (tok.compare(pos, 2, "..") != 0) throw std::invalid_argument("bad type token '" + tok + "'");
            pos += 2;
            if (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
                tok.insert(pos, 1, letter);
            }
            auto [letter2, hi2] = parse_one(tok, pos);
            if (letter2 != letter) throw std::invalid_argument("range spans two Cartan types in '" + tok + "'");
            if (pos != tok.size()) throw std::invalid_argument("trailing characters in '" + tok + "'");
            hi = hi2;
        }
        if (hi < lo) throw std::invalid_argument("empty rank range in '" + tok + "'");
        for (int r = lo; r <= hi; ++r)
            for (Flavor f : flavors) {
                DatumSpec s{letter, r, f};
                s.build();  // validates (type, rank)
                out.push_back(s);
            }
        if (end == text.size()) break;
    }
    if (out.empty()) throw std::invalid_argument("empty type list");
    return out;
}

bool VerifyReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json VerifyReport::to_json(bool timings) const
{
    Json list = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"datum", c.datum}, {"samples", c.samples}, {"pass", c.pass}, {"seed", c.seed}};
        if (c.counterexample) j["counterexample"] = *c.counterexample;
        if (timings) j["duration_s"] = c.seconds;
        list.push_back(std::move(j));
    }
    Json out{{"suite", suite}, {"seed", seed}, {"pass", pass()}, {"data", data}, {"checks", list}, {"notes", notes}};
    if (timings) out["duration_s"] = seconds;
    return out;
}

namespace {

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

struct Env {
    DatumSpec spec;
    GroupPtr group;

    const RootDatum& d() const { return group->datum(); }
    const AffineWeylGroup& g() const { return *group; }
};

class Probe {
public:
    explicit Probe(std::uint64_t seed) : rng(seed) {}

    template <class F>
    bool expect(bool ok, F&& describe)
    {
        ++samples;
        if (!ok && !counterexample) counterexample = describe();
        return ok;
    }

    Sampler rng;
    long samples = 0;
    std::optional<Json> counterexample;
    Json note;
};

using CheckFn = std::function<void(const Env&, Probe&)>;

struct Task {
    std::string suite;
    std::string name;
    DatumSpec spec;
    CheckFn fn;
};

using Builder = void (*)(std::vector<Task>&, const DatumSpec&);

Json pair_json(const char* k1, Json v1, const char* k2, Json v2) { return Json{{k1, std::move(v1)}, {k2, std::move(v2)}}; }

// ---------------------------------------------------------------- dcox

void add_dcox(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"dcox", "dcox.identity", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        const auto [theta, theta_v] = d.highest_root();
        const Rational half = d.killing_form(theta_v, theta_v) / 2;
        const Rational rho_side = 2 * (d.pair(d.rho(), theta_v) + 1);
        const Rational two_h = 2 * d.dual_coxeter_number();
        p.expect(half == rho_side && rho_side == two_h, [&] {
            return Json{{"half_norm", to_json(half)}, {"rho_side", to_json(rho_side)}, {"two_h_dual", to_json(two_h)}};
        });
        p.note = Json{{"h_dual", d.dual_coxeter_number()}};
    }});
    tasks.push_back({"dcox", "dcox.theta_pairing", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        const FinCoweight theta_v = d.highest_root().second;
        for (int k = 0; k < d.num_positive(); ++k) {
            if (k == d.highest_root_index()) continue;
            const Rational v = d.pair_root(k, theta_v);
            p.expect(v == 0 || v == 1, [&] { return pair_json("root", d.root(k), "pairing", to_json(v)); });
        }
    }});
    tasks.push_back({"dcox", "dcox.w_invariance", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (int t = 0; t < 100; ++t) {
            const WeylElt w = p.rng.weyl_elt(d);
            const FinCoweight x = p.rng.fin_coweight(d);
            const FinCoweight y = p.rng.fin_coweight(d);
            p.expect(d.killing_form(d.apply(w, x), d.apply(w, y)) == d.killing_form(x, y), [&] {
                return Json{{"w_perm", w.perm}, {"x", to_json(x)}, {"y", to_json(y)}};
            });
        }
    }});
    tasks.push_back({"dcox", "dcox.coxeter_relations", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (int i = 0; i < d.rank(); ++i)
            for (int j = 0; j < d.rank(); ++j) {
                const int m = i == j ? 1 : d.coxeter_exponent(i, j);
                const WeylElt x = d.compose(d.simple_reflection(i), d.simple_reflection(j));
                WeylElt power = d.identity();
                bool early = false;
                for (int k = 1; k <= m; ++k) {
                    power = d.compose(power, x);
                    if (k < m && power == d.identity()) early = true;
                }
                p.expect(power == d.identity() && !early,
                         [&] { return Json{{"i", i}, {"j", j}, {"m", m}}; });
            }
    }});
}

// ---------------------------------------------------------------- kacact

void add_kacact(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"kacact", "kacact.action_law_weight", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        for (int t = 0; t < 200; ++t) {
            const ExtWeylElt a = p.rng.ext_weyl(g, 6), b = p.rng.ext_weyl(g, 6);
            const AffWeight xi = p.rng.aff_weight(e.d());
            p.expect(g.act_on_weight(a, g.act_on_weight(b, xi)) == g.act_on_weight(g.mul(a, b), xi), [&] {
                return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"xi", to_json(xi)}};
            });
        }
    }});
    tasks.push_back({"kacact", "kacact.action_law_coweight", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        for (int t = 0; t < 200; ++t) {
            const ExtWeylElt a = p.rng.ext_weyl(g, 6), b = p.rng.ext_weyl(g, 6);
            const AffCoweight eta = p.rng.aff_coweight(e.d());
            p.expect(g.act_on_coweight(a, g.act_on_coweight(b, eta)) == g.act_on_coweight(g.mul(a, b), eta), [&] {
                return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"eta", to_json(eta)}};
            });
        }
    }});
    tasks.push_back({"kacact", "kacact.pairing_invariance", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        const RootDatum& d = e.d();
        for (int t = 0; t < 200; ++t) {
            const ExtWeylElt a = p.rng.ext_weyl(g, 6);
            const AffWeight xi = p.rng.aff_weight(d);
            const AffCoweight eta = p.rng.aff_coweight(d);
            p.expect(pair(d, g.act_on_weight(a, xi), g.act_on_coweight(a, eta)) == pair(d, xi, eta), [&] {
                return Json{{"a", to_json(a)}, {"xi", to_json(xi)}, {"eta", to_json(eta)}};
            });
        }
    }});
    tasks.push_back({"kacact", "kacact.fixes_delta_kcan", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        const RootDatum& d = e.d();
        for (int t = 0; t < 200; ++t) {
            const ExtWeylElt a = p.rng.ext_weyl(g, 6);
            p.expect(g.act_on_weight(a, delta(d)) == delta(d) && g.act_on_coweight(a, k_can(d)) == k_can(d),
                     [&] { return Json{{"a", to_json(a)}}; });
        }
    }});
}

// ---------------------------------------------------------------- s0

void add_s0(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"s0", "s0.reflection_weight", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        const RootDatum& d = e.d();
        const AffWeight a0 = affine_simple_root(d, 0);
        const AffCoweight a0v = affine_simple_coroot(d, 0);
        std::vector<AffWeight> basis{lambda_can(d), delta(d)};
        for (int i = 0; i < d.rank(); ++i) basis.push_back(embed(d.simple_root(i)));
        for (const auto& xi : basis) {
            const AffWeight want = xi - pair(d, xi, a0v) * a0;
            const AffWeight got = g.act_on_weight(g.simple_reflection(0), xi);
            p.expect(got == want, [&] { return Json{{"xi", to_json(xi)}, {"got", to_json(got)}, {"want", to_json(want)}}; });
        }
        p.note = Json{{"s0_sign", g.s0_sign()}};
    }});
    tasks.push_back({"s0", "s0.reflection_coweight", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        const RootDatum& d = e.d();
        const AffWeight a0 = affine_simple_root(d, 0);
        const AffCoweight a0v = affine_simple_coroot(d, 0);
        std::vector<AffCoweight> basis{k_can(d), d_gen(d)};
        for (int i = 0; i < d.rank(); ++i) basis.push_back(embed(d.simple_coroot(i)));
        for (const auto& eta : basis) {
            const AffCoweight want = eta - pair(d, a0, eta) * a0v;
            const AffCoweight got = g.act_on_coweight(g.simple_reflection(0), eta);
            p.expect(got == want, [&] { return Json{{"eta", to_json(eta)}, {"got", to_json(got)}, {"want", to_json(want)}}; });
        }
    }});
    tasks.push_back({"s0", "s0.involution", s, [](const Env& e, Probe& p) {
        const AffineWeylGroup& g = e.g();
        const ExtWeylElt sq = g.mul(g.simple_reflection(0), g.simple_reflection(0));
        p.expect(sq == g.identity(), [&] { return Json{{"s0_squared", to_json(sq)}}; });
        p.expect(g.length(g.simple_reflection(0)) == 1, [&] { return Json{{"length", g.length(g.simple_reflection(0))}}; });
    }});
    tasks.push_back({"s0", "s0.affine_cartan", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        const IntMatrix a = affine_cartan_matrix(d);
        const int n = d.rank();
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const bool ok = i == j ? a[i][j] == 2 : (a[i][j] <= 0 && (a[i][j] == 0) == (a[j][i] == 0));
                p.expect(ok, [&] { return Json{{"i", i}, {"j", j}, {"entry", a[i][j]}}; });
            }
        // alpha_0 + sum of marks times alpha_i is delta.
        AffWeight total = affine_simple_root(d, 0);
        for (int i = 1; i <= n; ++i) total += Rational(d.theta_marks()[i - 1]) * affine_simple_root(d, i);
        p.expect(total == delta(d), [&] { return Json{{"marks_sum", to_json(total)}}; });
    }});
}

// ---------------------------------------------------------------- daha

void add_daha(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"daha", "daha.associativity", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (int t = 0; t < 100; ++t) {
            const DahaElt a = p.rng.daha(e.g(), 3, 2, 2);
            const DahaElt b = p.rng.daha(e.g(), 3, 2, 2);
            const DahaElt c = p.rng.daha(e.g(), 3, 2, 2);
            p.expect(h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c)),
                     [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.involutions", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (int i = 0; i <= e.d().rank(); ++i) {
            const DahaElt sq = h.mul(h.reflection(i), h.reflection(i));
            p.expect(sq == h.one(), [&] { return Json{{"i", i}, {"square", to_json(sq)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.u_central", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (int t = 0; t < 50; ++t) {
            const DahaElt a = p.rng.daha(e.g(), 4, 2, 2);
            p.expect(h.mul(h.u(), a) == h.mul(a, h.u()), [&] { return Json{{"a", to_json(a)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.delta_central", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        const DahaElt dl = h.weight(delta(e.d()));
        for (int t = 0; t < 50; ++t) {
            const DahaElt a = p.rng.daha(e.g(), 4, 2, 2);
            p.expect(h.mul(dl, a) == h.mul(a, dl), [&] { return Json{{"a", to_json(a)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.reflection_commutation", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        const RootDatum& d = e.d();
        for (int i = 0; i <= d.rank(); ++i)
            for (int t = 0; t < 20; ++t) {
                const AffWeight xi = p.rng.aff_weight(d);
                const ExtWeylElt& s_i = e.g().simple_reflection(i);
                const DahaElt lhs =
                    h.mul(h.reflection(i), h.weight(xi)) - h.mul(h.weight(e.g().act_on_weight(s_i, xi)), h.reflection(i));
                const DahaElt rhs = pair(d, xi, affine_simple_coroot(d, i)) * h.u();
                p.expect(lhs == rhs, [&] { return Json{{"i", i}, {"xi", to_json(xi)}, {"lhs", to_json(lhs)}}; });
            }
    }});
    tasks.push_back({"daha", "daha.omega_commutation", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (const auto& omega : e.g().omega_elements())
            for (int t = 0; t < 20; ++t) {
                const AffWeight xi = p.rng.aff_weight(e.d());
                const DahaElt o = h.element(omega);
                p.expect(h.mul(o, h.weight(xi)) == h.mul(h.weight(e.g().act_on_weight(omega, xi)), o),
                         [&] { return Json{{"omega", to_json(omega)}, {"xi", to_json(xi)}}; });
            }
    }});
    tasks.push_back({"daha", "daha.degree_additivity", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        const RootDatum& d = e.d();
        auto homogeneous = [&](int k) {
            DahaElt a;
            const long terms = p.rng.uniform(1, 2);
            for (long t = 0; t < terms; ++t) a.add_term(p.rng.ext_weyl(e.g(), 3), p.rng.homogeneous_poly(d, k));
            return a;
        };
        for (int t = 0; t < 50; ++t) {
            const int k1 = static_cast<int>(p.rng.uniform(0, 2)), k2 = static_cast<int>(p.rng.uniform(0, 2));
            const DahaElt a = homogeneous(k1), b = homogeneous(k2);
            if (a.is_zero() || b.is_zero()) continue;
            const DahaElt ab = h.mul(a, b);
            const DahaDegree deg = h.degree(ab);
            p.expect(deg.zero || (deg.homogeneous && deg.max_degree == 2 * (k1 + k2)),
                     [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.idempotents", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (const auto& P : enumerate_standard(e.d())) {
            const DahaElt ep = h.idempotent(P);
            p.expect(h.mul(ep, ep) == ep, [&] { return Json{{"P", to_json(P)}}; });
            for (const auto& w : levi_weyl_group(e.g(), P))
                p.expect(h.sandwich(P, h.element(w)) == ep, [&] { return Json{{"P", to_json(P)}, {"w", to_json(w)}}; });
        }
    }});
    tasks.push_back({"daha", "daha.specialization", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        for (int t = 0; t < 50; ++t) {
            const ExtWeylElt w = p.rng.ext_weyl(e.g(), 4);
            const AffWeight xi = p.rng.aff_weight(e.d());
            const DahaElt lhs = h.specialize_degenerate(h.mul(h.element(w), h.weight(xi)));
            const DahaElt rhs = h.specialize_degenerate(h.mul(h.weight(e.g().act_on_weight(w, xi)), h.element(w)));
            p.expect(lhs == rhs, [&] { return Json{{"w", to_json(w)}, {"xi", to_json(xi)}}; });
        }
    }});
}

// ---------------------------------------------------------------- shifted

AffWeight shifted_root(const RootDatum& d, int i)
{
    return lambda_can(d) + embed(Rational(2) * d.rho()) - affine_simple_root(d, i);
}

void add_shifted(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"shifted", "shifted.pairing", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (int i = 0; i <= d.rank(); ++i) {
            const Rational v = pair(d, shifted_root(d, i), affine_simple_coroot(d, i));
            p.expect(v == 0, [&] { return Json{{"i", i}, {"pairing", to_json(v)}}; });
        }
    }});
    tasks.push_back({"shifted", "shifted.commutation", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        const RootDatum& d = e.d();
        for (int i = 0; i <= d.rank(); ++i) {
            const DahaElt x = h.weight(shifted_root(d, i));
            const DahaElt lhs = h.mul(h.reflection(i), x);
            const DahaElt rhs = h.mul(x, h.reflection(i));
            p.expect(lhs == rhs, [&] { return Json{{"i", i}, {"s_x", to_json(lhs)}, {"x_s", to_json(rhs)}}; });
        }
    }});
}

// ---------------------------------------------------------------- oracle

int braid_order(long product)
{
    switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
    }
}

void add_oracle(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"oracle", "oracle.homomorphism", s, [](const Env& e, Probe& p) {
        const Daha h(e.group);
        const PolynomialRep rep(e.group);
        for (int t = 0; t < 100; ++t) {
            const DahaElt a = p.rng.daha(e.g(), 3, 1, 2);
            const DahaElt b = p.rng.daha(e.g(), 3, 1, 2);
            const AffPoly f = p.rng.poly(e.d(), 3);
            p.expect(rep.act(h.mul(a, b), f) == rep.act(a, rep.act(b, f)),
                     [&] { return Json{{"a", to_json(a)}, {"b", to_json(b)}, {"p", to_json(f)}}; });
        }
    }});
    tasks.push_back({"oracle", "oracle.involutivity", s, [](const Env& e, Probe& p) {
        const PolynomialRep rep(e.group);
        for (int t = 0; t < 30; ++t) {
            const AffPoly f = p.rng.poly(e.d(), 4);
            for (int i = 0; i <= e.d().rank(); ++i)
                p.expect(rep.act_simple(i, rep.act_simple(i, f)) == f, [&] { return Json{{"i", i}, {"p", to_json(f)}}; });
        }
    }});
    tasks.push_back({"oracle", "oracle.braid", s, [](const Env& e, Probe& p) {
        const PolynomialRep rep(e.group);
        const IntMatrix a = affine_cartan_matrix(e.d());
        const int n = e.d().rank();
        for (int t = 0; t < 10; ++t) {
            const AffPoly f = p.rng.poly(e.d(), 4);
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const int m = braid_order(a[i][j] * a[j][i]);
                    if (m == 0) continue;
                    // Alternating words of length m starting with i and with j.
                    AffPoly x = f, y = f;
                    for (int k = m - 1; k >= 0; --k) {
                        x = rep.act_simple(k % 2 == 0 ? i : j, x);
                        y = rep.act_simple(k % 2 == 0 ? j : i, y);
                    }
                    p.expect(x == y, [&] { return Json{{"i", i}, {"j", j}, {"p", to_json(f)}}; });
                }
        }
    }});
    tasks.push_back({"oracle", "oracle.commutator", s, [](const Env& e, Probe& p) {
        const PolynomialRep rep(e.group);
        const RootDatum& d = e.d();
        for (int t = 0; t < 30; ++t) {
            const AffWeight xi = p.rng.aff_weight(d);
            const AffPoly f = p.rng.poly(d, 3);
            for (int i = 0; i <= d.rank(); ++i) {
                const AffPoly x = AffPoly::linear(xi);
                const AffPoly sx = AffPoly::linear(e.g().act_on_weight(e.g().simple_reflection(i), xi));
                const AffPoly lhs = rep.act_simple(i, x * f) - sx * rep.act_simple(i, f);
                const AffPoly rhs = pair(d, xi, affine_simple_coroot(d, i)) * (AffPoly::u(d.rank()) * f);
                p.expect(lhs == rhs, [&] { return Json{{"i", i}, {"xi", to_json(xi)}, {"p", to_json(f)}}; });
            }
        }
    }});
    tasks.push_back({"oracle", "oracle.divided_difference", s, [](const Env& e, Probe& p) {
        const PolynomialRep rep(e.group);
        const AffineWeylGroup& g = e.g();
        for (int t = 0; t < 30; ++t) {
            const AffPoly f = p.rng.poly(e.d(), 3);
            const AffPoly q = p.rng.poly(e.d(), 2);
            for (int i = 0; i <= e.d().rank(); ++i) {
                const bool square_zero = rep.divided_difference(i, rep.divided_difference(i, f)).is_zero();
                const AffPoly leibniz = rep.divided_difference(i, f) * q +
                                        act_on_poly(g, g.simple_reflection(i), f) * rep.divided_difference(i, q);
                p.expect(square_zero && rep.divided_difference(i, f * q) == leibniz,
                         [&] { return Json{{"i", i}, {"p", to_json(f)}, {"q", to_json(q)}}; });
            }
        }
    }});
}

// ---------------------------------------------------------------- conv

class CosetPool {
public:
    CosetPool(const ConvolutionAlgebra& conv, int max_len) : conv_(conv), max_len_(max_len) {}

    DCosetFn random(Sampler& rng, const ParahoricType& P, const ParahoricType& Q, int max_terms)
    {
        auto key = std::make_pair(P.subset, Q.subset);
        auto it = reps_.find(key);
        if (it == reps_.end()) it = reps_.emplace(key, conv_.group().double_cosets(P.subset, Q.subset, max_len_)).first;
        const auto& reps = it->second;
        DCosetFn f = conv_.zero(P, Q);
        const long terms = rng.uniform(1, max_terms);
        for (long t = 0; t < terms; ++t) {
            Rational c = rng.small_rational();
            if (c == 0) c = 1;
            f.support[reps[rng.uniform(0, static_cast<long>(reps.size()) - 1)]] += c;
        }
        std::erase_if(f.support, [](const auto& kv) { return kv.second == 0; });
        return f;
    }

private:
    const ConvolutionAlgebra& conv_;
    int max_len_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<ExtWeylElt>> reps_;
};

void add_conv(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"conv", "conv.associativity", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        CosetPool pool(conv, 6);
        // One random triple for every choice of the four slot types.
        const auto types = enumerate_standard(e.d());
        for (const auto& P : types)
            for (const auto& Q : types)
                for (const auto& R : types)
                    for (const auto& S : types) {
                        const DCosetFn f1 = pool.random(p.rng, P, Q, 2);
                        const DCosetFn f2 = pool.random(p.rng, Q, R, 2);
                        const DCosetFn f3 = pool.random(p.rng, R, S, 2);
                        p.expect(conv.convolve(conv.convolve(f1, f2), f3) == conv.convolve(f1, conv.convolve(f2, f3)),
                                 [&] { return Json{{"f1", to_json(f1)}, {"f2", to_json(f2)}, {"f3", to_json(f3)}}; });
                    }
    }});
    tasks.push_back({"conv", "conv.unit_laws", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        CosetPool pool(conv, 6);
        const auto types = enumerate_standard(e.d());
        for (const auto& P : types)
            for (const auto& Q : types) {
                const DCosetFn f = pool.random(p.rng, P, Q, 3);
                p.expect(conv.convolve(conv.unit(P), f) == f && conv.convolve(f, conv.unit(Q)) == f,
                         [&] { return Json{{"f", to_json(f)}}; });
            }
    }});
    tasks.push_back({"conv", "conv.support_bound", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        CosetPool pool(conv, 6);
        const auto types = enumerate_standard(e.d());
        auto pick = [&] { return types[p.rng.uniform(0, static_cast<long>(types.size()) - 1)]; };
        for (int t = 0; t < 40; ++t) {
            const ParahoricType P = pick(), Q = pick(), R = pick();
            const DCosetFn f1 = pool.random(p.rng, P, Q, 2);
            const DCosetFn f2 = pool.random(p.rng, Q, R, 2);
            // Support of f1 * f2 lies in W_P x W_Q y W_R, so the longest element
            // of W_Q enters the bound.
            int longest_q = 0;
            for (const auto& w : e.g().parabolic_elements(Q.subset)) longest_q = std::max(longest_q, e.g().length(w));
            const int bound = conv.max_length(f1) + conv.max_length(f2) + longest_q;
            p.expect(conv.max_length(conv.convolve(f1, f2)) <= bound,
                     [&] { return Json{{"f1", to_json(f1)}, {"f2", to_json(f2)}}; });
        }
    }});
    tasks.push_back({"conv", "conv.group_algebra", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        const AffineWeylGroup& g = e.g();
        CosetPool pool(conv, 4);
        const ParahoricType iwahori{};
        for (int t = 0; t < 30; ++t) {
            const DCosetFn f1 = pool.random(p.rng, iwahori, iwahori, 3);
            const DCosetFn f2 = pool.random(p.rng, iwahori, iwahori, 3);
            std::map<ExtWeylElt, Rational> product;
            for (const auto& [x, a] : f1.support)
                for (const auto& [y, b] : f2.support) product[g.mul(x, y)] += a * b;
            std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
            p.expect(conv.convolve(f1, f2).support == product,
                     [&] { return Json{{"f1", to_json(f1)}, {"f2", to_json(f2)}}; });
        }
    }});
    tasks.push_back({"conv", "conv.translations", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        const AffineWeylGroup& g = e.g();
        const ParahoricType iwahori{};
        for (int t = 0; t < 30; ++t) {
            const IntVector l = p.rng.lattice_vector(e.d(), 2), m = p.rng.lattice_vector(e.d(), 2);
            IntVector sum(l.size());
            for (std::size_t k = 0; k < l.size(); ++k) sum[k] = l[k] + m[k];
            const DCosetFn got =
                conv.convolve(conv.indicator(iwahori, iwahori, g.translation(l)), conv.indicator(iwahori, iwahori, g.translation(m)));
            p.expect(got == conv.indicator(iwahori, iwahori, g.translation(sum)),
                     [&] { return Json{{"lambda", l}, {"mu", m}}; });
        }
    }});
}

// ---------------------------------------------------------------- parahoric

void add_parahoric(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"parahoric", "parahoric.count", s, [](const Env& e, Probe& p) {
        const auto types = enumerate_standard(e.d());
        const long want = (1L << (e.d().rank() + 1)) - 1;
        p.expect(static_cast<long>(types.size()) == want,
                 [&] { return Json{{"count", types.size()}, {"expected", want}}; });
        for (const auto& P : types)
            p.expect(e.g().parabolic_is_finite(P.subset), [&] { return Json{{"P", to_json(P)}}; });
        p.note = Json{{"count", types.size()}};
    }});
    tasks.push_back({"parahoric", "parahoric.classical_roundtrip", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        if (!has_classical_index(d)) return;
        std::set<std::vector<int>> seen;
        for (const auto& P : enumerate_standard(d)) {
            const auto index = to_classical_index(d, P);
            const bool in_range = std::all_of(index.begin(), index.end(), [&](int v) { return v >= 0 && v <= d.rank(); });
            const bool fresh = seen.insert(index).second;
            p.expect(in_range && fresh && from_classical_index(d, index) == P,
                     [&] { return Json{{"P", to_json(P)}, {"index", index}}; });
        }
    }});
    tasks.push_back({"parahoric", "parahoric.levi_order", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (const auto& P : enumerate_standard(d)) {
            const long want = subdiagram_weyl_order(d, P);
            if (want > 5000) continue;
            const auto elts = levi_weyl_group(e.g(), P);
            p.expect(static_cast<long>(elts.size()) == want,
                     [&] { return Json{{"P", to_json(P)}, {"order", elts.size()}, {"expected", want}}; });
        }
    }});
    tasks.push_back({"parahoric", "parahoric.inclusion", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (const auto& Q : enumerate_standard(d)) {
            if (subdiagram_weyl_order(d, Q) > 2000) continue;
            const auto big = levi_weyl_group(e.g(), Q);
            const std::set<ExtWeylElt> big_set(big.begin(), big.end());
            for (std::size_t drop = 0; drop < Q.subset.size(); ++drop) {
                ParahoricType P = Q;
                P.subset.erase(P.subset.begin() + static_cast<long>(drop));
                const auto small = levi_weyl_group(e.g(), P);
                const bool ok = std::all_of(small.begin(), small.end(), [&](const ExtWeylElt& w) { return big_set.contains(w); });
                p.expect(ok, [&] { return Json{{"P", to_json(P)}, {"Q", to_json(Q)}}; });
            }
        }
    }});
    tasks.push_back({"parahoric", "parahoric.fixes_delta", s, [](const Env& e, Probe& p) {
        const RootDatum& d = e.d();
        for (const auto& P : enumerate_standard(d)) {
            if (subdiagram_weyl_order(d, P) > 2000) continue;
            const auto elts = levi_weyl_group(e.g(), P);
            std::set<std::vector<Rational>> orbit;
            bool fixes = true;
            for (const auto& w : elts) {
                fixes = fixes && e.g().act_on_weight(w, delta(d)) == delta(d);
                const AffWeight img = e.g().act_on_weight(w, lambda_can(d));
                std::vector<Rational> key = img.fin.coords;
                key.push_back(img.c_lambda);
                key.push_back(img.c_delta);
                orbit.insert(key);
            }
            p.expect(fixes && elts.size() % orbit.size() == 0,
                     [&] { return Json{{"P", to_json(P)}, {"orbit", orbit.size()}}; });
        }
    }});
}

// ---------------------------------------------------------------- av

std::vector<IntVector> small_lattice_vectors(int rank, long max_l1)
{
    std::vector<IntVector> out{IntVector(rank, 0)};
    for (int k = 0; k < rank; ++k) {
        std::vector<IntVector> next;
        for (const auto& v : out)
            for (long c = -max_l1; c <= max_l1; ++c) {
                IntVector w = v;
                w[k] = c;
                long l1 = 0;
                for (long x : w) l1 += x < 0 ? -x : x;
                if (l1 <= max_l1) next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

void add_av(std::vector<Task>& tasks, const DatumSpec& s)
{
    tasks.push_back({"av", "av.normalization", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        const RootDatum& d = e.d();
        const auto vectors = small_lattice_vectors(d.rank(), 2);
        Json per_type = Json::array();
        for (const auto& P : enumerate_standard(d)) {
            if (P.subset.empty()) continue;
            std::set<Rational> constants;
            long structural = 0, instances = 0;
            std::optional<Json> first_defect;
            for (const auto& l : vectors)
                for (const auto& m : vectors) {
                    const FinCoweight lam = d.from_cochar_lattice_coords(l), mu = d.from_cochar_lattice_coords(m);
                    const AvFit fit = conv.av_fit(P, lam, mu);
                    ++instances;
                    if (fit.proportional) {
                        constants.insert(fit.c);
                    } else {
                        ++structural;
                        if (!first_defect) first_defect = Json{{"lambda", l}, {"mu", m}};
                    }
                }
            Json entry{{"P", to_json(P)}, {"instances", instances}, {"structural_defects", structural}};
            Json cs = Json::array();
            for (const auto& c : constants) cs.push_back(to_json(c));
            entry["constants"] = cs;
            per_type.push_back(entry);
            p.expect(structural == 0 && constants.size() == 1, [&] {
                Json cx = entry;
                if (first_defect) cx["first_defect"] = *first_defect;
                return cx;
            });
        }
        p.note = Json{{"fits", per_type}};
    }});
    tasks.push_back({"av", "av.trivial_parahoric", s, [](const Env& e, Probe& p) {
        const ConvolutionAlgebra conv(e.group);
        const RootDatum& d = e.d();
        const ParahoricType iwahori{};
        for (const auto& l : small_lattice_vectors(d.rank(), 2)) {
            const FinCoweight lam = d.from_cochar_lattice_coords(l);
            const AvEmbedding emb = conv.av_embed(iwahori, lam);
            p.expect(emb.normalization && *emb.normalization == 1 &&
                         emb.indicator == conv.indicator(iwahori, iwahori, e.g().translation(l)),
                     [&] { return Json{{"lambda", l}}; });
        }
    }});
}

// ---------------------------------------------------------------- runner

const std::map<std::string, Builder>& builders()
{
    static const std::map<std::string, Builder> table{
        {"dcox", add_dcox},     {"kacact", add_kacact}, {"s0", add_s0},
        {"daha", add_daha},     {"shifted", add_shifted}, {"oracle", add_oracle},
        {"conv", add_conv},     {"parahoric", add_parahoric},   {"av", add_av},
    };
    return table;
}

unsigned thread_count(unsigned requested)
{
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("DAHAKIT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, n);
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"dcox", "kacact", "s0", "daha", "shifted",
                                                "oracle", "conv", "parahoric", "av"};
    return names;
}

std::vector<DatumSpec> default_types(const std::string& suite)
{
    if (suite == "dcox") return parse_type_list("A1..A4,B2..B4,C2..C4,D4,F4,G2");
    if (suite == "kacact") return parse_type_list("A1..A3:both,B2..B3:both,C2..C3:both,G2");
    if (suite == "s0" || suite == "shifted")
        return parse_type_list("A1..A4:both,B2..B4:both,C2..C4:both,D4..D5:both,E6:both,E7:both,E8,F4,G2");
    if (suite == "daha" || suite == "oracle") return parse_type_list("A1..A2:both,B2:both,C2:both,G2");
    if (suite == "conv") return parse_type_list("A1..A2:both");
    if (suite == "parahoric") return parse_type_list("A1..A5,B2..B5,C2..C5");
    if (suite == "av") return parse_type_list("A1..A2");
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

VerifyReport run_suite(const std::string& suite, const std::optional<std::vector<DatumSpec>>& types,
                       const VerifyOptions& options)
{
    std::vector<std::string> suites;
    if (suite == "all") suites = suite_names();
    else if (builders().contains(suite)) suites = {suite};
    else throw std::invalid_argument("unknown suite '" + suite + "'");

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = suite;
    report.seed = options.seed;

    std::vector<Task> tasks;
    std::map<std::string, GroupPtr> groups;
    std::set<std::string> names;
    for (const auto& s : suites) {
        for (const auto& spec : types ? *types : default_types(s)) {
            if (!groups.contains(spec.name()))
                groups.emplace(spec.name(), std::make_shared<const AffineWeylGroup>(spec.build()));
            names.insert(spec.name());
            builders().at(s)(tasks, spec);
        }
    }
    report.data.assign(names.begin(), names.end());

    std::vector<CheckResult> results(tasks.size());
    std::vector<Json> notes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            const Task& task = tasks[k];
            CheckResult& r = results[k];
            r.name = task.name;
            r.datum = task.spec.name();
            r.seed = derive_seed(options.seed, task.name + "/" + r.datum);
            const auto t0 = std::chrono::steady_clock::now();
            Probe probe(r.seed);
            try {
                task.fn(Env{task.spec, groups.at(r.datum)}, probe);
            } catch (const std::exception& ex) {
                if (!probe.counterexample) probe.counterexample = Json{{"exception", ex.what()}};
            }
            r.samples = probe.samples;
            r.counterexample = probe.counterexample;
            r.pass = !probe.counterexample;
            notes[k] = std::move(probe.note);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const unsigned n_threads = std::min<unsigned>(thread_count(options.threads), static_cast<unsigned>(tasks.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t k = 0; k < tasks.size(); ++k)
        if (!notes[k].is_null())
            for (const auto& [key, value] : notes[k].items()) report.notes[tasks[k].suite][results[k].datum][key] = value;

    std::vector<std::size_t> order(tasks.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(results[a].name, results[a].datum) < std::tie(results[b].name, results[b].datum);
    });
    for (std::size_t k : order) report.checks.push_back(std::move(results[k]));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace dahakit
