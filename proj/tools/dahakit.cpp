// dahakit command-line front end. Every command writes one JSON document to
// stdout. Exit status: 0 success, 1 failed check, 2 usage or input error.

#include "dahakit/polyrep.hpp"
#include "dahakit/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace dahakit;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DatumArgs {
    std::string type = "A";
    int rank = 1;
    bool adjoint = false;

    void attach(CLI::App* app)
    {
        app->add_option("--type", type, "Cartan type letter A..G")->required();
        app->add_option("--rank", rank, "rank")->required();
        app->add_flag("--adjoint", adjoint, "adjoint isogeny flavor (default simply connected)");
    }

    RootDatumPtr datum() const
    {
        if (type.size() != 1) throw UsageError("--type must be a single letter");
        return RootDatum::build(type[0], rank, adjoint ? Flavor::adjoint : Flavor::simply_connected);
    }

    std::shared_ptr<const AffineWeylGroup> group() const { return std::make_shared<const AffineWeylGroup>(datum()); }
};

Json read_input(const std::string& path)
{
    std::stringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file '" + path + "'");
        buffer << in.rdbuf();
    }
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw DecodeError(std::string("malformed JSON: ") + e.what());
    }
}

const Json& need(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw DecodeError(std::string("input is missing key '") + key + "'");
    return j.at(key);
}

std::vector<int> parse_indices(const std::string& text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad index list '" + text + "'");
        }
    }
    return out;
}

Json degree_json(const DahaDegree& deg)
{
    if (deg.zero) return Json{{"degree", "-inf"}, {"homogeneous", true}};
    return Json{{"degree", deg.max_degree}, {"homogeneous", deg.homogeneous}};
}

Json root_info(const RootDatum& d)
{
    Json positive = Json::array();
    for (int k = 0; k < d.num_positive(); ++k) positive.push_back(d.root(k));
    const int theta = d.highest_root_index();
    return Json{{"type", std::string(1, d.type())},
                {"rank", d.rank()},
                {"flavor", to_string(d.flavor())},
                {"cartan_matrix", d.cartan()},
                {"positive_roots", positive},
                {"theta", d.root(theta)},
                {"theta_dual", d.coroot(theta)},
                {"rho", to_json(d.rho())},
                {"h_dual", d.dual_coxeter_number()},
                {"killing_gram", d.killing_gram()}};
}

Json element_view(const AffineWeylGroup& g, const ExtWeylElt& a)
{
    return Json{{"element", to_json(a)}, {"word", to_json(g.reduced_word(a))}, {"length", g.length(a)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in extended affine Weyl groups and graded double affine Hecke algebras"};
    app.require_subcommand(1);
    std::string input_path;
    app.add_option("--input", input_path, "read the JSON input from a file instead of stdin");

    int exit_code = 0;
    std::function<void()> action;

    // rootsys
    auto* rootsys = app.add_subcommand("rootsys", "finite root data");
    rootsys->require_subcommand(1);
    DatumArgs info_args;
    auto* info = rootsys->add_subcommand("info", "Cartan data, roots, rho, h_dual, Killing Gram matrix");
    info_args.attach(info);
    info->callback([&] { action = [&] { emit(root_info(*info_args.datum())); }; });

    // wext
    auto* wext = app.add_subcommand("wext", "extended affine Weyl group");
    wext->require_subcommand(1);
    DatumArgs wext_args;
    auto add_wext = [&](const char* name, const char* help, std::function<Json(const AffineWeylGroup&, const Json&)> body) {
        auto* sub = wext->add_subcommand(name, help);
        wext_args.attach(sub);
        sub->callback([&, body] {
            action = [&, body] {
                const auto g = wext_args.group();
                emit(body(*g, read_input(input_path)));
            };
        });
        return sub;
    };
    add_wext("mul", "product of {\"a\", \"b\"}", [](const AffineWeylGroup& g, const Json& in) {
        const ExtWeylElt c = g.mul(ext_weyl_from_json(g, need(in, "a")), ext_weyl_from_json(g, need(in, "b")));
        return Json{{"result", element_view(g, c)}};
    });
    add_wext("inv", "inverse of {\"a\"}", [](const AffineWeylGroup& g, const Json& in) {
        return Json{{"result", element_view(g, g.inv(ext_weyl_from_json(g, need(in, "a"))))}};
    });
    add_wext("act", "action of {\"a\"} on \"weight\" and/or \"coweight\"", [](const AffineWeylGroup& g, const Json& in) {
        const ExtWeylElt a = ext_weyl_from_json(g, need(in, "a"));
        Json out = Json::object();
        if (in.contains("weight")) out["weight"] = to_json(g.act_on_weight(a, aff_weight_from_json(g.datum(), in["weight"])));
        if (in.contains("coweight"))
            out["coweight"] = to_json(g.act_on_coweight(a, aff_coweight_from_json(g.datum(), in["coweight"])));
        if (out.empty()) throw DecodeError("input needs a \"weight\" or a \"coweight\"");
        return out;
    });
    add_wext("word", "reduced word and Omega decomposition of {\"a\"}", [](const AffineWeylGroup& g, const Json& in) {
        const ExtWeylElt a = ext_weyl_from_json(g, need(in, "a"));
        const auto [waff, omega] = g.omega_decompose(a);
        Json out = element_view(g, a);
        out["omega_element"] = to_json(omega);
        out["waff_part"] = to_json(waff);
        out["omega_permutation"] = Json::array();
        for (int i = 0; i <= g.rank(); ++i) out["omega_permutation"].push_back(g.conj_simple_by_omega(omega, i));
        return out;
    });
    std::string coset_p, coset_q;
    int coset_len = 2;
    auto* cosets = wext->add_subcommand("cosets", "minimal representatives of W_P \\ W~ / W_Q up to a length");
    wext_args.attach(cosets);
    cosets->add_option("--P", coset_p, "comma-separated affine node indices");
    cosets->add_option("--Q", coset_q, "comma-separated affine node indices");
    cosets->add_option("--max-length", coset_len, "length bound")->check(CLI::NonNegativeNumber);
    cosets->callback([&] {
        action = [&] {
            const auto g = wext_args.group();
            const ParahoricType P = make_parahoric(*g, parse_indices(coset_p));
            const ParahoricType Q = make_parahoric(*g, parse_indices(coset_q));
            Json reps = Json::array();
            for (const auto& x : g->double_cosets(P.subset, Q.subset, coset_len)) reps.push_back(element_view(*g, x));
            emit(Json{{"P", to_json(P)}, {"Q", to_json(Q)}, {"max_length", coset_len}, {"representatives", reps}});
        };
    });

    // daha
    auto* daha = app.add_subcommand("daha", "graded double affine Hecke algebra");
    daha->require_subcommand(1);
    DatumArgs daha_args;
    auto add_daha = [&](const char* name, const char* help, std::function<Json(const Daha&, const Json&)> body) {
        auto* sub = daha->add_subcommand(name, help);
        daha_args.attach(sub);
        sub->callback([&, body] {
            action = [&, body] {
                const Daha h(daha_args.group());
                emit(body(h, read_input(input_path)));
            };
        });
    };
    add_daha("mul", "product of {\"a\", \"b\"}", [](const Daha& h, const Json& in) {
        const DahaElt c = h.mul(daha_from_json(h.group(), need(in, "a")), daha_from_json(h.group(), need(in, "b")));
        return Json{{"result", to_json(c)}, {"degree", degree_json(h.degree(c))}};
    });
    add_daha("nf", "normal forms of the product of {\"factors\": [...]}", [](const Daha& h, const Json& in) {
        const Json& factors = need(in, "factors");
        if (!factors.is_array() || factors.empty()) throw DecodeError("factors must be a nonempty array");
        DahaElt product = h.one();
        for (const auto& f : factors) product = h.mul(product, daha_from_json(h.group(), f));
        return Json{{"right", to_json(product)}, {"left", to_json(h.to_left_form(product))},
                    {"degree", degree_json(h.degree(product))}};
    });
    add_daha("specialize", "image of {\"a\"} modulo (u, delta)", [](const Daha& h, const Json& in) {
        return Json{{"result", to_json(h.specialize_degenerate(daha_from_json(h.group(), need(in, "a"))))}};
    });
    DatumArgs dverify_args;
    std::string oracle = "none";
    std::uint64_t dverify_seed = VerifyOptions{}.seed;
    bool dverify_timings = false;
    auto* dverify = daha->add_subcommand("verify", "relation checks, or the polynomial-representation oracle");
    dverify_args.attach(dverify);
    dverify->add_option("--oracle", oracle, "none or polyrep")->check(CLI::IsMember({"none", "polyrep"}));
    dverify->add_option("--seed", dverify_seed, "random seed");
    dverify->add_flag("--timings", dverify_timings, "include durations in the report");
    dverify->callback([&] {
        action = [&] {
            const auto d = dverify_args.datum();
            const DatumSpec spec{d->type(), d->rank(), d->flavor()};
            const VerifyReport report = run_suite(oracle == "polyrep" ? "oracle" : "daha", std::vector{spec},
                                                  VerifyOptions{dverify_seed, 0});
            emit(report.to_json(dverify_timings));
            if (!report.pass()) exit_code = 1;
        };
    });

    // conv
    auto* convc = app.add_subcommand("conv", "double-coset convolution algebras");
    convc->require_subcommand(1);
    DatumArgs conv_args;
    std::optional<std::string> conv_p, conv_q, conv_r;
    auto* cmul = convc->add_subcommand("mul", "convolution of two functions [f1, f2] or {\"f1\", \"f2\"}");
    conv_args.attach(cmul);
    cmul->add_option("--P", conv_p, "expected left type of f1");
    cmul->add_option("--Q", conv_q, "expected middle type");
    cmul->add_option("--R", conv_r, "expected right type of f2");
    cmul->callback([&] {
        action = [&] {
            const ConvolutionAlgebra conv(conv_args.group());
            const Json in = read_input(input_path);
            const Json& j1 = in.is_array() && in.size() == 2 ? in[0] : need(in, "f1");
            const Json& j2 = in.is_array() && in.size() == 2 ? in[1] : need(in, "f2");
            const DCosetFn f1 = dcoset_from_json(conv, j1), f2 = dcoset_from_json(conv, j2);
            auto expect_type = [&](const std::optional<std::string>& flag, const ParahoricType& got, const char* what) {
                if (flag && make_parahoric(conv.group(), parse_indices(*flag)) != got)
                    throw DecodeError(std::string("input does not match --") + what);
            };
            expect_type(conv_p, f1.P, "P");
            expect_type(conv_q, f1.Q, "Q");
            expect_type(conv_q, f2.P, "Q");
            expect_type(conv_r, f2.Q, "R");
            if (f1.Q != f2.P) throw DecodeError("middle parahoric types differ");
            emit(Json{{"result", to_json(conv.convolve(f1, f2))}});
        };
    });

    // parahoric
    auto* parahoric = app.add_subcommand("parahoric", "standard parahoric types");
    parahoric->require_subcommand(1);
    DatumArgs par_args;
    auto* plist = parahoric->add_subcommand("list", "every standard parahoric type");
    par_args.attach(plist);
    plist->callback([&] {
        action = [&] {
            const auto d = par_args.datum();
            Json out = Json::array();
            for (const auto& P : enumerate_standard(*d)) {
                Json entry{{"subset", to_json(P)}, {"weyl_order", subdiagram_weyl_order(*d, P)}};
                entry["classical_index"] = has_classical_index(*d) ? Json(to_classical_index(*d, P)) : Json(nullptr);
                out.push_back(entry);
            }
            emit(out);
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    std::optional<std::string> types;
    std::uint64_t seed = VerifyOptions{}.seed;
    unsigned threads = 0;
    bool timings = false;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_choices));
    verify->add_option("--types", types, "e.g. A1..A4,B2..B4,C2:adj,G2 (default depends on the suite)");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify->add_flag("--timings", timings, "include durations in the report");
    verify->callback([&] {
        action = [&] {
            std::optional<std::vector<DatumSpec>> list;
            if (types) list = parse_type_list(*types);
            const VerifyReport report = run_suite(suite, list, VerifyOptions{seed, threads});
            emit(report.to_json(timings));
            long failed = 0;
            for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
            std::cerr << "suite " << suite << ": " << report.checks.size() - failed << "/" << report.checks.size()
                      << " checks passed in " << report.seconds << " s\n";
            if (!report.pass()) exit_code = 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return 2;
    }

    try {
        if (action) action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        emit(Json{{"error", e.what()}});
        return 1;
    }
    return exit_code;
}
