// Command-line front end: generators, separator counting, formula
// evaluation, and verification runs with machine-readable JSON reports.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
// JSON goes to stdout; human-readable summaries go to stderr.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <msep/msep.hpp>

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;

json set_to_json(const msep::VertexSet& s) { return json(s.to_vector()); }

json separators_to_json(const std::vector<msep::VertexSet>& seps) {
    json arr = json::array();
    for (const auto& s : seps) arr.push_back(set_to_json(s));
    return arr;
}

json edges_to_json(const std::vector<msep::Edge>& edges) {
    json arr = json::array();
    for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

int emit_report(const std::string& command, const json& params, const json& results,
                const std::string& output_path, Clock::time_point t0, int exit_code,
                const std::string& summary) {
    json envelope;
    envelope["command"] = command;
    envelope["params"] = params;
    envelope["results"] = results;
    envelope["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    envelope["version"] = msep::kVersion;
    std::string text = envelope.dump(2) + "\n";
    std::cout << text;
    if (!output_path.empty()) {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write report to '" << output_path << "'\n";
            return kExitUsage;
        }
        out << text;
    }
    if (!summary.empty()) std::cerr << summary << "\n";
    return exit_code;
}

struct GenOptions {
    std::string family;
    msep::FamilyParams params;
    std::string graph_out;
    std::string report_out;
};

int run_gen(const GenOptions& opt) {
    auto t0 = Clock::now();
    msep::Graph g;
    json params;
    params["family"] = opt.family;
    if (opt.family == "melon") {
        params["k"] = opt.params.k;
        g = msep::melon(opt.params.k);
    } else if (opt.family == "block") {
        params["m"] = opt.params.m;
        g = msep::block(opt.params.m);
    } else {
        params["ell"] = opt.params.ell;
        params["m"] = opt.params.m;
        g = msep::glued(opt.params.ell, opt.params.m);
    }
    msep::save_graph(g, opt.graph_out);
    json results;
    results["n"] = g.vertex_count();
    results["m"] = g.edge_count();
    results["path"] = opt.graph_out;
    return emit_report("gen", params, results, opt.report_out, t0, kExitOk,
                       opt.family + ": n=" + std::to_string(g.vertex_count()) +
                           " m=" + std::to_string(g.edge_count()) + " -> " + opt.graph_out);
}

struct CountOptions {
    std::string input;
    std::string method = "branch";
    std::vector<int> pair;
    int max_brute_n = msep::kDefaultBruteForceCap;
    unsigned jobs = 1;
    bool emit_separators = false;
    std::string report_out;
};

int run_count(const CountOptions& opt) {
    auto t0 = Clock::now();
    msep::Graph g = msep::load_graph(opt.input);
    const int n = g.vertex_count();

    json params;
    params["input"] = opt.input;
    params["method"] = opt.method;
    if (!opt.pair.empty()) params["pair"] = json(opt.pair);
    params["max_brute_n"] = opt.max_brute_n;
    params["jobs"] = opt.jobs;
    params["emit_separators"] = opt.emit_separators;

    json results;
    results["n"] = n;
    std::vector<msep::VertexSet> seps;
    std::optional<msep::EnumerationReport> rep;

    if (!opt.pair.empty()) {
        int a = opt.pair[0], b = opt.pair[1];
        if (opt.method == "brute") {
            seps = msep::brute_force_minimal_ab_separators(g, a, b, opt.max_brute_n);
        } else {
            rep = msep::enumerate_minimal_ab_separators_report(g, a, b);
            seps = rep->separators;
        }
    } else if (opt.method == "brute") {
        seps = msep::brute_force_minimal_separators(g, opt.max_brute_n);
    } else {
        auto mode = opt.method == "branch" ? msep::EnumerationMode::balanced
                                           : msep::EnumerationMode::all;
        rep = msep::enumerate_minimal_separators(g, mode, opt.jobs);
        seps = rep->separators;
    }

    results["count"] = seps.size();
    results["mode"] = opt.method;
    if (rep) {
        results["leaf_count"] = rep->leaf_count;
        results["node_count"] = rep->node_count;
        std::uint64_t max_root = 0;
        for (auto c : rep->root_leaf_counts) max_root = std::max(max_root, c);
        results["max_root_leaf_count"] = max_root;
        results["rho_pow_n"] = std::pow(msep::kGoldenRatio, n);
    }
    if (opt.emit_separators) results["separators"] = separators_to_json(seps);

    std::string summary = "count: " + std::to_string(seps.size()) + " separators (" + opt.method;
    if (rep)
        summary += "; " + std::to_string(rep->leaf_count) + " leaves, " +
                   std::to_string(rep->node_count) + " nodes";
    summary += ")";
    return emit_report("count", params, results, opt.report_out, t0, kExitOk, summary);
}

struct VerifyOptions {
    std::string target;
    int m = 2;
    int n = 6;
    std::string input;
    int max_brute_n = msep::kDefaultBruteForceCap;
    std::string report_out;
};

int run_verify_family(const VerifyOptions& opt, json& params, json& results) {
    params["m"] = opt.m;
    msep::Graph g = msep::block(opt.m);
    msep::BigInt expected =
        boost::multiprecision::pow(msep::BigInt(3), static_cast<unsigned>(2 * (opt.m - 1)));

    results["m"] = opt.m;
    results["n"] = g.vertex_count();
    results["family_size_expected"] = expected.str();
    json families = json::array();

    std::vector<msep::LayerFamily> fams;
    for (int j = 1; j <= opt.m; ++j) {
        msep::LayerFamily fam = msep::layer_family(g, j);  // members verified internally
        families.push_back({{"j", j},
                            {"size", fam.separators.size()},
                            {"rejected_candidates", fam.rejected_candidates}});
        fams.push_back(std::move(fam));
    }
    results["families"] = families;
    for (const auto& fam : fams) {
        if (msep::BigInt(fam.separators.size()) != expected) {
            results["counterexample"] = {
                {"layer", fam.avoided_layer},
                {"reason", "family size differs from the closed form"},
                {"verified_members", fam.separators.size()},
                {"rejected_candidates", fam.rejected_candidates}};
            return kExitVerificationFailed;
        }
    }

    for (std::size_t i = 0; i < fams.size(); ++i) {
        for (std::size_t j = i + 1; j < fams.size(); ++j) {
            for (const auto& s : fams[i].separators) {
                if (std::binary_search(fams[j].separators.begin(), fams[j].separators.end(), s)) {
                    results["counterexample"] = {{"reason", "families not disjoint"},
                                                 {"layers", {fams[i].avoided_layer,
                                                             fams[j].avoided_layer}},
                                                 {"separator", set_to_json(s)}};
                    return kExitVerificationFailed;
                }
            }
        }
    }
    results["pairwise_disjoint"] = true;

    // the families undercount: separators confined to one half also exist
    if (opt.m <= 3) {
        auto all = msep::enumerate_minimal_ab_separators(g, 0, 1);
        msep::BigInt claimed_union = expected * opt.m;
        results["ab_separator_count"] = all.size();
        results["closed_form_union"] = claimed_union.str();
        if (msep::BigInt(all.size()) <= claimed_union) {
            results["counterexample"] = {
                {"reason", "total (a,b)-separator count does not exceed the closed-form union"},
                {"ab_separator_count", all.size()},
                {"closed_form_union", claimed_union.str()}};
            return kExitVerificationFailed;
        }
        results["strictly_exceeds_union"] = true;
    }
    return kExitOk;
}

int run_verify_corollary(const VerifyOptions& opt, json& params, json& results) {
    params["input"] = opt.input;
    params["max_brute_n"] = opt.max_brute_n;
    msep::Graph g = msep::load_graph(opt.input);
    auto rep = msep::check_corollary(g, opt.max_brute_n);
    results["n"] = g.vertex_count();
    results["pmc_count"] = rep.pmc_count;
    results["sep_count"] = rep.sep_count;
    results["corollary_holds"] = rep.holds;
    if (!rep.holds) {
        results["counterexample"] = {{"reason", "pmc(G) * n < sep(G)"},
                                     {"pmc_count", rep.pmc_count},
                                     {"sep_count", rep.sep_count}};
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int run_verify_bounds(const VerifyOptions& opt, json& params, json& results) {
    params["n"] = opt.n;
    if (opt.n < 2) throw std::invalid_argument("verify bounds: --n must be >= 2");
    json values = json::array();
    std::uint64_t prev = 0;
    for (int n = 2; n <= opt.n; ++n) {
        auto res = msep::max_sep_exhaustive(n);
        double bound = std::pow(msep::kGoldenRatio, n) * n;
        values.push_back({{"n", n},
                          {"sep", res.count},
                          {"bound", bound},
                          {"witness_edges", edges_to_json(res.witness.edges())}});
        results["values"] = values;
        if (res.count < prev) {
            results["counterexample"] = {{"reason", "sep(n) decreased"}, {"n", n}};
            return kExitVerificationFailed;
        }
        if (static_cast<double>(res.count) > bound) {
            results["counterexample"] = {{"reason", "sep(n) exceeds rho^n * n"},
                                         {"n", n},
                                         {"sep", res.count},
                                         {"bound", bound}};
            return kExitVerificationFailed;
        }
        prev = res.count;
    }
    return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
    auto t0 = Clock::now();
    json params;
    params["target"] = opt.target;
    json results;
    int code;
    if (opt.target == "family")
        code = run_verify_family(opt, params, results);
    else if (opt.target == "corollary")
        code = run_verify_corollary(opt, params, results);
    else
        code = run_verify_bounds(opt, params, results);
    results["ok"] = code == kExitOk;
    return emit_report("verify", params, results, opt.report_out, t0, code,
                       "verify " + opt.target + ": " + (code == kExitOk ? "ok" : "FAILED"));
}

struct FormulaOptions {
    std::string what;
    int m = 24;
    int max_m = 24;
    std::string report_out;
};

int run_formula(const FormulaOptions& opt) {
    auto t0 = Clock::now();
    json params;
    params["what"] = opt.what;
    json results;
    std::string summary;
    if (opt.what == "lb-count") {
        params["m"] = opt.m;
        std::string v = msep::lb_count(opt.m).str();
        results["m"] = opt.m;
        results["lb_count"] = v;
        summary = "lb-count(" + std::to_string(opt.m) + ") = " + v;
    } else if (opt.what == "growth-base") {
        params["m"] = opt.m;
        auto base = msep::growth_base(opt.m);
        results["m"] = opt.m;
        results["growth_base"] = base.to_string();
        results["significant_digits"] = base.digits;
        results["rounding"] = "down";
        summary = "growth-base(" + std::to_string(opt.m) + ") = " + base.to_string();
    } else {
        params["max_m"] = opt.max_m;
        auto best = msep::best_layer_count(opt.max_m);
        results["max_m"] = opt.max_m;
        results["best_m"] = best.m;
        results["growth_base"] = best.base.to_string();
        summary = "best-m over 2.." + std::to_string(opt.max_m) + ": m=" +
                  std::to_string(best.m) + " (base " + best.base.to_string() + ")";
    }
    return emit_report("formula", params, results, opt.report_out, t0, kExitOk, summary);
}

int run_maxsep(int n, const std::string& report_out) {
    auto t0 = Clock::now();
    json params;
    params["n"] = n;
    auto res = msep::max_sep_exhaustive(n);
    json results;
    results["n"] = n;
    results["max_count"] = res.count;
    results["witness_edges"] = edges_to_json(res.witness.edges());
    return emit_report("maxsep", params, results, report_out, t0, kExitOk,
                       "sep(" + std::to_string(n) + ") = " + std::to_string(res.count));
}

int run_pmc(const std::string& input, int max_brute_n, const std::string& report_out) {
    auto t0 = Clock::now();
    json params;
    params["input"] = input;
    params["max_brute_n"] = max_brute_n;
    msep::Graph g = msep::load_graph(input);
    auto rep = msep::check_corollary(g, max_brute_n);
    json results;
    results["n"] = g.vertex_count();
    results["pmc_count"] = rep.pmc_count;
    results["sep_count"] = rep.sep_count;
    results["corollary_holds"] = rep.holds;
    return emit_report("pmc", params, results, report_out, t0, kExitOk,
                       "pmc=" + std::to_string(rep.pmc_count) +
                           " sep=" + std::to_string(rep.sep_count));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal-separator toolkit: enumerate, count, and cross-verify minimal "
                 "separators and potential maximal cliques"};
    app.require_subcommand(1);
    app.set_version_flag("--version", msep::kVersion);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate an extremal family graph");
    gen_cmd->add_option("family", gen.family, "melon | block | glued")
        ->required()
        ->check(CLI::IsMember({"melon", "block", "glued"}));
    gen_cmd->add_option("--k", gen.params.k, "melon layer count");
    gen_cmd->add_option("--m", gen.params.m, "block layer count");
    gen_cmd->add_option("--ell", gen.params.ell, "number of glued blocks");
    gen_cmd->add_option("-o,--output", gen.graph_out, "output graph file")->required();
    gen_cmd->add_option("--report", gen.report_out, "also write the JSON report to a file");

    CountOptions count;
    auto* count_cmd = app.add_subcommand("count", "count minimal separators of a graph file");
    count_cmd->add_option("input", count.input, "graph file")->required();
    count_cmd->add_option("--method", count.method, "brute | branch | branch-all")
        ->check(CLI::IsMember({"brute", "branch", "branch-all"}));
    count_cmd->add_option("--pair", count.pair, "restrict to minimal (a,b)-separators")
        ->expected(2);
    count_cmd->add_option("--max-brute-n", count.max_brute_n, "vertex cap for brute force");
    count_cmd->add_option("--jobs", count.jobs, "worker threads for per-root enumeration");
    count_cmd->add_flag("--emit-separators", count.emit_separators,
                        "include the separators themselves in the report");
    count_cmd->add_option("-o,--output", count.report_out, "also write the JSON report to a file");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("target", verify.target, "family | corollary | bounds")
        ->required()
        ->check(CLI::IsMember({"family", "corollary", "bounds"}));
    verify_cmd->add_option("--m", verify.m, "block layer count (family)");
    verify_cmd->add_option("--n", verify.n, "largest n for the exhaustive bound check (bounds)");
    verify_cmd->add_option("--input", verify.input, "graph file (corollary)");
    verify_cmd->add_option("--max-brute-n", verify.max_brute_n, "vertex cap for brute force");
    verify_cmd->add_option("-o,--output", verify.report_out,
                           "also write the JSON report to a file");

    FormulaOptions formula;
    auto* formula_cmd = app.add_subcommand("formula", "evaluate the counting formulas exactly");
    formula_cmd->add_option("what", formula.what, "lb-count | growth-base | best-m")
        ->required()
        ->check(CLI::IsMember({"lb-count", "growth-base", "best-m"}));
    formula_cmd->add_option("--m", formula.m, "layer count");
    formula_cmd->add_option("--max-m", formula.max_m, "scan limit for best-m");
    formula_cmd->add_option("-o,--output", formula.report_out,
                            "also write the JSON report to a file");

    int maxsep_n = 6;
    std::string maxsep_out;
    auto* maxsep_cmd = app.add_subcommand("maxsep", "exact sep(n) by exhausting all graphs");
    maxsep_cmd->add_option("--n", maxsep_n, "vertex count (<= 7)")->required();
    maxsep_cmd->add_option("-o,--output", maxsep_out, "also write the JSON report to a file");

    std::string pmc_input, pmc_out;
    int pmc_max_brute_n = msep::kDefaultBruteForceCap;
    auto* pmc_cmd = app.add_subcommand("pmc", "count potential maximal cliques and check the "
                                              "separator corollary");
    pmc_cmd->add_option("input", pmc_input, "graph file")->required();
    pmc_cmd->add_option("--max-brute-n", pmc_max_brute_n, "vertex cap for the subset scans");
    pmc_cmd->add_option("-o,--output", pmc_out, "also write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            bool ok = (gen.family == "melon" && gen_cmd->count("--k")) ||
                      (gen.family == "block" && gen_cmd->count("--m")) ||
                      (gen.family == "glued" && gen_cmd->count("--ell") && gen_cmd->count("--m"));
            if (!ok)
                throw std::invalid_argument("gen " + gen.family +
                                            ": missing required parameter (melon: --k, block: "
                                            "--m, glued: --ell --m)");
            return run_gen(gen);
        }
        if (count_cmd->parsed()) return run_count(count);
        if (verify_cmd->parsed()) {
            if (verify.target == "corollary" && verify.input.empty())
                throw std::invalid_argument("verify corollary: --input is required");
            return run_verify(verify);
        }
        if (formula_cmd->parsed()) return run_formula(formula);
        if (maxsep_cmd->parsed()) return run_maxsep(maxsep_n, maxsep_out);
        if (pmc_cmd->parsed()) return run_pmc(pmc_input, pmc_max_brute_n, pmc_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
