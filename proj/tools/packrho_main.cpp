// packrho: packing colorings, Grundy packing chromatic numbers, and
// machine checks of the closed-form results, over graph6/DIMACS/edge-list
// inputs. Prints a JSON run report on stdout (the `family` subcommand
// prints the raw graph document instead).
//
// Exit codes: 0 ok, 1 failed verification/check, 2 usage or input error,
// 3 size or budget limit hit (partial result flagged in the report).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "packrho/coloring.hpp"
#include "packrho/exact.hpp"
#include "packrho/families.hpp"
#include "packrho/graph_io.hpp"
#include "packrho/parallel.hpp"
#include "packrho/report.hpp"
#include "packrho/rng.hpp"
#include "packrho/theorems.hpp"

namespace {

using namespace packrho;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw BadParametersError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GraphInput {
    std::string path;
    std::string family;
    std::string format = "auto";

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "graph file ('-' for stdin)");
        cmd->add_option("--family", family, "generate the input instead of reading a file");
        cmd->add_option("--format", format, "graph6|dimacs|edgelist|auto")
            ->check(CLI::IsMember({"graph6", "dimacs", "edgelist", "auto"}));
    }

    Graph load() const {
        if (!family.empty()) return generate(family);
        if (path.empty()) throw BadParametersError("no graph given (file or --family)");
        std::string text = read_input(path);
        GraphFormat fmt;
        if (format == "graph6") fmt = GraphFormat::graph6;
        else if (format == "dimacs") fmt = GraphFormat::dimacs;
        else if (format == "edgelist") fmt = GraphFormat::edgelist;
        else fmt = detect_format(path == "-" ? "" : path, text);
        return parse_graph(GraphDocument{fmt, text, path});
    }
};

int emit(const json& report) {
    std::cout << report.dump(2) << '\n';
    return 0;
}

int run_color(const GraphInput& gin, const std::string& order_kind,
              const std::string& order_file, std::uint64_t seed) {
    auto t0 = Clock::now();
    Graph g = gin.load();
    VertexOrder order = VertexOrder::identity(g.n);
    if (order_kind == "random") {
        SplitMix64 rng(seed);
        order = VertexOrder::of(random_permutation(g.n, rng), g.n);
    } else if (order_kind == "file") {
        std::istringstream in(read_input(order_file));
        std::vector<int> seq;
        long long v;
        while (in >> v) seq.push_back(static_cast<int>(v));
        order = VertexOrder::of(seq, g.n);
    }
    auto coloring = greedy_color(g, order);
    json result;
    result["colors_used"] = coloring.k;
    result["coloring"] = coloring_json(coloring.colors);
    result["order"] = order.seq;
    result["seed"] = seed;
    return emit(make_report("color", graph_summary_json(g), result, ms_since(t0)));
}

int run_gamma(const GraphInput& gin, const std::string& method, double budget,
              int threads) {
    auto t0 = Clock::now();
    Graph g = gin.load();
    SearchOptions opts;
    opts.budget_seconds = budget;
    opts.threads = threads;
    GammaResult r;
    if (method == "layering") r = gamma_exact_layering(g, opts);
    else if (method == "orderings") r = gamma_oracle_orderings(g, 12, threads);
    else if (method == "theorem3") r = gamma_via_theorem3(g);
    else r = gamma_auto(g, opts);
    json report = make_report("gamma", graph_summary_json(g), gamma_result_json(r),
                              ms_since(t0));
    emit(report);
    return r.exact ? 0 : 3;
}

int run_chi(const GraphInput& gin, const std::string& method, double budget) {
    auto t0 = Clock::now();
    Graph g = gin.load();
    SearchOptions opts{.max_n = 12, .budget_seconds = budget};
    ChiResult r;
    if (method == "exact") r = chi_exact(g, opts);
    else if (method == "diam2") r = chi_diam2(g);
    else if (method == "diam3") r = chi_diam3(g);
    else r = chi_auto(g, opts);
    json report =
        make_report("chi", graph_summary_json(g), chi_result_json(r), ms_since(t0));
    emit(report);
    return r.exact ? 0 : 3;
}

int run_verify(const GraphInput& gin, const std::string& coloring_path, bool greedy) {
    auto t0 = Clock::now();
    Graph g = gin.load();
    auto colors = parse_coloring(read_input(coloring_path));
    PackingColoring c;
    c.colors = colors;
    for (int col : colors) c.k = std::max(c.k, col);
    json result;
    bool ok;
    if (greedy) {
        auto check = verify_greedy_packing_coloring(g, c);
        ok = check.ok();
        result["greedy"] = true;
        result["ok"] = ok;
        if (check.status == GreedyCheck::Status::not_packing) {
            result["violation"] = {{"u", check.violation.u},
                                   {"v", check.violation.v},
                                   {"color", check.violation.color}};
        } else if (check.status == GreedyCheck::Status::missing_color) {
            result["witness"] = {{"vertex", check.vertex},
                                 {"missing_color", check.missing_color}};
        }
    } else {
        auto viol = verify_packing_coloring(g, c);
        ok = !viol.has_value();
        result["greedy"] = false;
        result["ok"] = ok;
        if (viol)
            result["violation"] = {{"u", viol->u}, {"v", viol->v}, {"color", viol->color}};
    }
    emit(make_report("verify", graph_summary_json(g), result, ms_since(t0)));
    return ok ? 0 : 1;
}

int run_family(const std::string& spec, const std::string& format,
               const std::string& out_path) {
    Graph g = generate(spec);
    GraphFormat fmt = GraphFormat::graph6;
    if (format == "dimacs") fmt = GraphFormat::dimacs;
    else if (format == "edgelist") fmt = GraphFormat::edgelist;
    auto doc = write_graph(g, fmt);
    std::string text = doc.text;
    if (fmt == GraphFormat::graph6) text += '\n';
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw BadParametersError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

int run_check(const std::string& which, int nmax, long long trials,
              std::uint64_t seed, int threads) {
    auto t0 = Clock::now();
    std::vector<TheoremReport> reports;
    auto want = [&](const std::string& id) { return which == "all" || which == id; };
    if (want("universal")) reports.push_back(check_prop_universal(nmax, threads));
    if (want("n-minus-1")) reports.push_back(check_thm_n_minus_1(nmax, threads));
    if (want("diam-formulas")) {
        auto rs = check_diam_formulas(nmax, threads);
        reports.insert(reports.end(), rs.begin(), rs.end());
    }
    if (want("joins")) reports.push_back(check_joins());
    if (want("paths")) {
        PathCheckOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        opts.threads = threads;
        reports.push_back(check_paths(opts));
    }
    if (reports.empty())
        throw BadParametersError(
            "unknown check '" + which +
            "' (universal, n-minus-1, diam-formulas, joins, paths, all)");
    json arr = json::array();
    bool all_ok = true;
    for (const auto& r : reports) {
        arr.push_back(theorem_report_json(r));
        all_ok = all_ok && r.passed;
    }
    json result;
    result["reports"] = arr;
    result["passed"] = all_ok;
    emit(make_report("check", nullptr, result, ms_since(t0)));
    return all_ok ? 0 : 1;
}

int run_bench(int n, long long m, std::uint64_t seed, int reps) {
    auto t0 = Clock::now();
    Graph g = random_graph(n, m, seed);
    json rows = json::array();
    for (int rep = 0; rep < reps; ++rep) {
        SplitMix64 rng = stream_for(seed, rep);
        auto order = rep == 0 ? VertexOrder::identity(n)
                              : VertexOrder::of(random_permutation(n, rng), n);
        auto t1 = Clock::now();
        auto coloring = greedy_color(g, order);
        double ms = ms_since(t1);
        rows.push_back({{"rep", rep},
                        {"order", rep == 0 ? "identity" : "random"},
                        {"colors_used", coloring.k},
                        {"ms", ms}});
    }
    json result;
    result["runs"] = rows;
    result["seed"] = seed;
    emit(make_report("bench", graph_summary_json(g), result, ms_since(t0)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing colorings and Grundy packing chromatic numbers"};
    app.require_subcommand(1);
    int threads = worker_count();
    app.add_option("--threads", threads, "worker count (PACKRHO_THREADS overrides default)");

    auto* color_cmd = app.add_subcommand("color", "run the first-fit packing coloring");
    GraphInput color_in;
    color_in.attach(color_cmd);
    std::string order_kind = "ids", order_file;
    std::uint64_t color_seed = 0;
    color_cmd->add_option("--order", order_kind, "ids|random|file")
        ->check(CLI::IsMember({"ids", "random", "file"}));
    color_cmd->add_option("--order-file", order_file, "one vertex id per line");
    color_cmd->add_option("--seed", color_seed, "seed for --order random");

    auto* gamma_cmd = app.add_subcommand("gamma", "Grundy packing chromatic number");
    GraphInput gamma_in;
    gamma_in.attach(gamma_cmd);
    std::string gamma_method = "auto";
    double gamma_budget = 0;
    gamma_cmd->add_option("--method", gamma_method, "layering|orderings|theorem3|auto")
        ->check(CLI::IsMember({"layering", "orderings", "theorem3", "auto"}));
    gamma_cmd->add_option("--budget", gamma_budget, "seconds before returning a bound");

    auto* chi_cmd = app.add_subcommand("chi", "packing chromatic number");
    GraphInput chi_in;
    chi_in.attach(chi_cmd);
    std::string chi_method = "auto";
    double chi_budget = 0;
    chi_cmd->add_option("--method", chi_method, "exact|diam2|diam3|auto")
        ->check(CLI::IsMember({"exact", "diam2", "diam3", "auto"}));
    chi_cmd->add_option("--budget", chi_budget, "seconds before returning a bound");

    auto* verify_cmd = app.add_subcommand("verify", "verify a coloring file");
    GraphInput verify_in;
    verify_in.attach(verify_cmd);
    std::string coloring_path;
    bool verify_greedy = false;
    verify_cmd->add_option("coloring", coloring_path, "one 1-based color per line")
        ->required();
    verify_cmd->add_flag("--greedy", verify_greedy, "also require greedy reachability");

    auto* family_cmd = app.add_subcommand("family", "emit a named graph");
    std::string family_spec, family_format = "graph6", family_out;
    family_cmd->add_option("spec", family_spec, "e.g. cycle:6, knn_minus_matching:3, join(path:4,path:4)")
        ->required();
    family_cmd->add_option("--format", family_format, "graph6|dimacs|edgelist")
        ->check(CLI::IsMember({"graph6", "dimacs", "edgelist"}));
    family_cmd->add_option("-o,--output", family_out, "output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "machine-check the closed-form results");
    std::string check_which = "all";
    int check_nmax = 6;
    long long check_trials = 10000;
    std::uint64_t check_seed = 1;
    check_cmd->add_option("theorem", check_which,
                          "universal|n-minus-1|diam-formulas|joins|paths|all");
    check_cmd->add_option("--nmax", check_nmax, "sweep bound (<= 7)");
    check_cmd->add_option("--trials", check_trials, "random orders for the path check");
    check_cmd->add_option("--seed", check_seed, "seed for randomized checks");

    auto* bench_cmd = app.add_subcommand("bench", "time the first-fit pass");
    int bench_n = 2000;
    long long bench_m = 10000;
    std::uint64_t bench_seed = 1;
    int bench_reps = 3;
    bench_cmd->add_option("--n", bench_n, "vertices");
    bench_cmd->add_option("--m", bench_m, "edges");
    bench_cmd->add_option("--seed", bench_seed, "random graph seed");
    bench_cmd->add_option("--reps", bench_reps, "greedy runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*color_cmd) return run_color(color_in, order_kind, order_file, color_seed);
        if (*gamma_cmd) return run_gamma(gamma_in, gamma_method, gamma_budget, threads);
        if (*chi_cmd) return run_chi(chi_in, chi_method, chi_budget);
        if (*verify_cmd) return run_verify(verify_in, coloring_path, verify_greedy);
        if (*family_cmd) return run_family(family_spec, family_format, family_out);
        if (*check_cmd)
            return run_check(check_which, check_nmax, check_trials, check_seed, threads);
        if (*bench_cmd) return run_bench(bench_n, bench_m, bench_seed, bench_reps);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
