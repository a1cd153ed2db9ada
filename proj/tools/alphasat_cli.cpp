// alphasat: generators, shrinking, solvers and threshold calculators for
// alpha-intersecting k-CNF formulas. Exit codes: 0 success, 1 negative
// verdict (UNSAT / no guarantee / structure check failed), 2 usage or input
// error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "alphasat/config.hpp"
#include "alphasat/io.hpp"
#include "alphasat/lll.hpp"
#include "alphasat/maximal.hpp"
#include "alphasat/metrics.hpp"
#include "alphasat/oracle.hpp"
#include "alphasat/pipeline.hpp"
#include "alphasat/shrink.hpp"
#include "alphasat/thresholds.hpp"
#include "alphasat/unsat_builder.hpp"

using json = nlohmann::json;
using namespace alphasat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

void apply_coverage_cap_env() {
    if (const char* env = std::getenv("ALPHASAT_COVERAGE_CAP")) {
        set_coverage_cap(std::stoi(env));  // throws on junk or out-of-range
    }
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json bounds_json(const ThresholdBounds& b) {
    return json{{"k", b.k},
                {"alpha", b.alpha},
                {"d", b.d},
                {"degenerate", b.degenerate},
                {"L", json{{"i", b.L_i}, {"n", b.L_n}, {"m", b.L_m}}},
                {"U", json{{"i", b.U_i},
                           {"n", b.U_n},
                           {"m", b.U_m},
                           {"delta", b.U_delta}}}};
}

std::string assignment_bits(const Assignment& a) {
    std::string s;
    s.reserve(a.size());
    for (std::size_t v = 0; v < a.size(); ++v)
        s.push_back(a.get(static_cast<int>(v)) ? '1' : '0');
    return s;
}

std::vector<std::string> guarantee_names(const GuaranteeReport& g) {
    std::vector<std::string> names;
    if (g.by_variables)
        names.push_back("variables");
    if (g.by_clauses)
        names.push_back("clauses");
    if (g.by_intersections)
        names.push_back("intersections");
    return names;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const std::string& p : parts) {
        if (!out.empty())
            out.push_back(sep);
        out += p;
    }
    return out;
}

int cmd_gen_maximal(int n, int k, int alpha, std::uint64_t seed,
                    const std::string& out_path,
                    std::optional<std::uint64_t> sample_budget) {
    GreedyOptions options;
    if (sample_budget.has_value()) {
        options.allow_sampling = true;
        options.max_consecutive_rejections = *sample_budget;
    }
    const GreedyResult r = greedy_alpha_build(n, k, alpha, seed, options);
    save_hypergraph(out_path, r.graph);

    json report{{"n", n},
                {"k", k},
                {"alpha", alpha},
                {"seed", seed},
                {"m", r.graph.edges.size()},
                {"certified_maximal", r.certified_maximal},
                {"min_edges_bound", min_edges_bound(n, k, alpha)},
                {"out", out_path}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_shrink(int beta, const std::string& in_path, const std::string& out_path) {
    if (ends_with(in_path, ".cnf")) {
        save_formula(out_path, shrink_formula(load_formula(in_path), beta));
    } else if (ends_with(in_path, ".hyg")) {
        save_hypergraph(out_path, shrink_hypergraph(load_hypergraph(in_path), beta));
    } else {
        throw std::invalid_argument("shrink: input must end in .cnf or .hyg");
    }
    return kExitOk;
}

int cmd_build_unsat(const std::string& in_path, const std::string& out_path,
                    const std::string& order, std::uint64_t seed,
                    const std::string& trace_path) {
    const Hypergraph h = load_hypergraph(in_path);
    const EdgeOrder edge_order =
        order == "shuffle" ? EdgeOrder::Shuffle : EdgeOrder::Input;
    const UnsatBuildResult r = build_unsat(h, edge_order, seed);
    save_formula(out_path, r.formula);

    if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace)
            throw std::invalid_argument("cannot write " + trace_path);
        trace << "step,edge_index,newly_covered,uncovered_after\n";
        for (std::size_t s = 0; s < r.trace.size(); ++s)
            trace << s + 1 << ',' << r.trace[s].edge_index << ','
                  << r.trace[s].newly_covered << ',' << r.trace[s].uncovered_after
                  << '\n';
    }

    json report{{"n", h.n},
                {"m", h.edges.size()},
                {"final_uncovered", r.final_uncovered},
                {"unsatisfiable", r.final_uncovered == 0},
                {"out", out_path}};
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int cmd_pipeline(int k, int alpha, std::optional<std::int64_t> n_override,
                 bool with_polarity, std::uint64_t seed,
                 const std::string& out_dir) {
    PipelineOptions options;
    options.n_override = n_override;
    options.with_polarity = with_polarity;
    options.seed = seed;
    const PipelineResult r = upper_bound_pipeline(k, alpha, options);

    std::filesystem::create_directories(out_dir);
    const auto path = [&](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    save_hypergraph(path("H.hyg"), r.source);
    save_hypergraph(path("H_shrunk.hyg"), r.shrunk);

    json report{{"k", k},
                {"alpha", alpha},
                {"n", r.n},
                {"m", r.m},
                {"density_target", r.density_target},
                {"certified_maximal", r.certified_maximal},
                {"max_vertex_degree_shrunk", r.max_vertex_degree},
                {"degree_bound", r.degree_bound},
                {"degree_bound_ok", r.degree_bound_ok},
                {"intersection_pairs_shrunk", r.intersection_pair_count},
                {"intersections_ok", r.intersections_ok}};
    if (r.polarity.has_value()) {
        save_formula(path("F.cnf"), r.polarity->formula);
        save_formula(path("F_shrunk.cnf"), *r.shrunk_formula);
        report["final_uncovered"] = r.polarity->final_uncovered;
    }

    std::ofstream(path("report.json")) << report.dump(2) << "\n";
    std::cout << report.dump(2) << "\n";
    return r.structure_ok() ? kExitOk : kExitNegative;
}

int cmd_solve(const std::string& in_path, int k, int alpha, std::uint64_t seed,
              std::optional<std::uint64_t> max_resamples) {
    const CnfFormula f = load_formula(in_path);
    if (const auto width = f.uniform_width();
        !f.clauses.empty() && (!width.has_value() || *width != k))
        throw std::invalid_argument("solve: formula width does not match --k");

    const SolveResult r = solve_alpha_intersecting(f, alpha, seed, max_resamples);
    json report{{"k", k},
                {"alpha", alpha},
                {"degree_threshold", r.condition.threshold},
                {"max_vertex_degree_shrunk", r.condition.max_vertex_degree},
                {"condition_passes", r.condition.passes}};
    if (r.solved()) {
        report["status"] = "sat";
        report["resamples"] = r.resamples;
        report["assignment"] = assignment_bits(*r.assignment);
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }
    report["status"] = "no_guarantee";
    report["high_degree_vertices"] = r.high_degree_vertices;
    std::cout << report.dump(2) << "\n";
    return kExitNegative;
}

int cmd_metrics(const std::string& in_path, std::optional<int> k_opt,
                std::optional<int> alpha_opt, const std::string& format) {
    const CnfFormula f = load_formula(in_path);
    const MetricsReport r = metrics(f);

    const int k = k_opt.value_or(static_cast<int>(r.width));
    const int alpha = alpha_opt.value_or(
        std::max<int>(1, static_cast<int>(r.alpha_measured)));
    const bool premise_ok = k > alpha && alpha >= 1 && r.width == k &&
                            r.alpha_measured <= alpha;

    GuaranteeReport g;
    std::vector<std::string> names;
    if (premise_ok) {
        g = guarantee_check(r, k, alpha);
        names = guarantee_names(g);
    }

    if (format == "csv") {
        std::cout << "n,m,width,alpha_measured,i,delta_vertex,delta_clause,"
                     "L_n,L_m,L_i,guaranteed_by\n";
        std::cout << r.n << ',' << r.m << ',' << r.width << ',' << r.alpha_measured
                  << ',' << r.i << ',' << r.delta_vertex << ',' << r.delta_clause
                  << ',' << g.bounds.L_n << ',' << g.bounds.L_m << ',' << g.bounds.L_i
                  << ',' << join(names, ';') << "\n";
    } else {
        json report{{"n", r.n},
                    {"m", r.m},
                    {"width", r.width},
                    {"alpha_measured", r.alpha_measured},
                    {"i", r.i},
                    {"delta_vertex", r.delta_vertex},
                    {"delta_clause", r.delta_clause},
                    {"k", k},
                    {"alpha", alpha},
                    {"premise_ok", premise_ok},
                    {"guaranteed_by", names}};
        if (premise_ok)
            report["bounds"] = bounds_json(evaluate_thresholds(k, alpha));
        std::cout << report.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_thresholds(int k, int alpha) {
    std::cout << bounds_json(evaluate_thresholds(k, alpha)).dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& in_path) {
    const CnfFormula f = load_formula(in_path);
    const auto witness = brute_force_sat(f);
    if (witness.has_value()) {
        std::cout << "SAT\n" << assignment_bits(*witness) << "\n";
        return kExitOk;
    }
    std::cout << "UNSAT\n";
    return kExitNegative;
}

int cmd_complete(int k, const std::string& out_path) {
    save_formula(out_path, complete_formula(k));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-intersecting k-CNF toolkit"};
    app.require_subcommand(1);

    // gen-maximal
    auto* gen = app.add_subcommand("gen-maximal",
                                   "greedy maximal alpha-intersecting hypergraph");
    int gen_n = 0, gen_k = 0, gen_alpha = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    std::optional<std::uint64_t> gen_sample_budget;
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--k", gen_k)->required();
    gen->add_option("--alpha", gen_alpha)->required();
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out)->required();
    gen->add_option("--sample-budget", gen_sample_budget,
                    "sampling mode: stop after this many consecutive rejections "
                    "(output not certified maximal)");

    // shrink
    auto* shrink = app.add_subcommand("shrink", "beta-shrink a .hyg or .cnf file");
    int shrink_beta = 0;
    std::string shrink_in, shrink_out;
    shrink->add_option("--beta", shrink_beta)->required();
    shrink->add_option("--in", shrink_in)->required();
    shrink->add_option("--out", shrink_out)->required();

    // build-unsat
    auto* build = app.add_subcommand("build-unsat",
                                     "greedy polarity selection over a hypergraph");
    std::string build_in, build_out, build_trace;
    std::string build_order = "input";
    std::uint64_t build_seed = 0;
    build->add_option("--in", build_in)->required();
    build->add_option("--out", build_out)->required();
    build->add_option("--order", build_order)
        ->check(CLI::IsMember({"input", "shuffle"}));
    build->add_option("--seed", build_seed);
    build->add_option("--trace", build_trace, "per-step coverage CSV");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "maximal-build + shrink pipeline");
    int pipe_k = 0, pipe_alpha = 0;
    std::optional<std::int64_t> pipe_n;
    bool pipe_polarity = false;
    std::uint64_t pipe_seed = 0;
    std::string pipe_dir;
    pipe->add_option("--k", pipe_k)->required();
    pipe->add_option("--alpha", pipe_alpha)->required();
    pipe->add_option("--n", pipe_n, "override auto_n");
    pipe->add_flag("--with-polarity", pipe_polarity,
                   "also emit the unsatisfiable CNF (needs n within the coverage cap)");
    pipe->add_option("--seed", pipe_seed);
    pipe->add_option("--out-dir", pipe_dir)->required();

    // solve
    auto* solve = app.add_subcommand("solve", "shrink-then-resample solver");
    std::string solve_in;
    int solve_k = 0, solve_alpha = 0;
    std::uint64_t solve_seed = 0;
    std::optional<std::uint64_t> solve_cap;
    solve->add_option("--in", solve_in)->required();
    solve->add_option("--k", solve_k)->required();
    solve->add_option("--alpha", solve_alpha)->required();
    solve->add_option("--seed", solve_seed);
    solve->add_option("--max-resamples", solve_cap);

    // metrics
    auto* met = app.add_subcommand("metrics", "measured quantities and guarantees");
    std::string met_in, met_format = "json";
    std::optional<int> met_k, met_alpha;
    met->add_option("--in", met_in)->required();
    met->add_option("--k", met_k);
    met->add_option("--alpha", met_alpha);
    met->add_option("--format", met_format)->check(CLI::IsMember({"csv", "json"}));

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "evaluate the L and U families");
    int thr_k = 0, thr_alpha = 0;
    thr->add_option("--k", thr_k)->required();
    thr->add_option("--alpha", thr_alpha)->required();

    // verify
    auto* ver = app.add_subcommand("verify", "brute-force satisfiability check");
    std::string ver_in;
    ver->add_option("--in", ver_in)->required();

    // complete
    auto* comp = app.add_subcommand("complete", "complete formula on k variables");
    int comp_k = 0;
    std::string comp_out;
    comp->add_option("--k", comp_k)->required();
    comp->add_option("--out", comp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        apply_coverage_cap_env();
        if (gen->parsed())
            return cmd_gen_maximal(gen_n, gen_k, gen_alpha, gen_seed, gen_out,
                                   gen_sample_budget);
        if (shrink->parsed())
            return cmd_shrink(shrink_beta, shrink_in, shrink_out);
        if (build->parsed())
            return cmd_build_unsat(build_in, build_out, build_order, build_seed,
                                   build_trace);
        if (pipe->parsed())
            return cmd_pipeline(pipe_k, pipe_alpha, pipe_n, pipe_polarity, pipe_seed,
                                pipe_dir);
        if (solve->parsed())
            return cmd_solve(solve_in, solve_k, solve_alpha, solve_seed, solve_cap);
        if (met->parsed())
            return cmd_metrics(met_in, met_k, met_alpha, met_format);
        if (thr->parsed())
            return cmd_thresholds(thr_k, thr_alpha);
        if (ver->parsed())
            return cmd_verify(ver_in);
        if (comp->parsed())
            return cmd_complete(comp_k, comp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
