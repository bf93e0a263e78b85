// Command-line front end: stats | sparsify | ricci | hyper | bench | gen.
// Exit codes: 0 success, 1 failed verification, 2 input or parameter error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnsparse/clique_expansion.hpp"
#include "cnsparse/curvature.hpp"
#include "cnsparse/datasets.hpp"
#include "cnsparse/generators.hpp"
#include "cnsparse/io.hpp"
#include "cnsparse/json_out.hpp"
#include "cnsparse/laplacian.hpp"
#include "cnsparse/local_stats.hpp"
#include "cnsparse/sampler.hpp"
#include "cnsparse/spectral.hpp"

using nlohmann::json;
using namespace cnsparse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

Graph resolve_input_graph(const std::string& input) {
    if (input.rfind("builtin:", 0) == 0) return load_builtin(input.substr(8));
    if (std::filesystem::exists(input)) {
        LoadedGraph lg = read_edge_list_file(input);
        if (lg.has_weights)
            throw std::runtime_error("'" + input + "' is weighted; this command needs an unweighted graph");
        return lg.graph;
    }
    if (input == "karate" || input == "dolphins") return load_builtin(input);
    throw std::runtime_error("cannot open '" + input + "'");
}

void emit(const json& report, const std::string& output_path) {
    std::string text = dump_json(report) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output_path);
        if (!f) throw std::runtime_error("cannot open '" + output_path + "' for writing");
        f << text;
    }
}

json spectral_report_json(const SpectralReport& rep) {
    return json{{"eig_min", rep.eig_min},
                {"eig_max", rep.eig_max},
                {"distortion", rep.distortion},
                {"epsilon", rep.epsilon},
                {"pass", rep.pass}};
}

int cmd_stats(const std::string& input, bool as_json, const std::string& output) {
    Timer timer;
    Graph g = resolve_input_graph(input);
    bool connected = is_connected(g);
    if (!connected)
        std::cerr << "warning: graph is disconnected; alpha is still reported but the "
                     "sampling guarantee does not apply\n";
    LocalStats s = compute_local_stats(g);
    json stats{{"n", s.n},
               {"edges", s.edge_count},
               {"avg_degree", s.avg_degree},
               {"clustering_all", s.clustering_all},
               {"clustering_deg2", s.clustering_deg2},
               {"alpha", s.alpha},
               {"alpha_lower_bound", nullptr}};
    bool has_isolated = false;
    for (int v = 0; v < g.num_nodes(); ++v) has_isolated |= (g.degree(v) == 0);
    if (!has_isolated && g.num_nodes() > 0) stats["alpha_lower_bound"] = alpha_lower_bound(s, g);

    if (as_json) {
        json report{{"command", "stats"},
                    {"input", input},
                    {"parameters", json::object()},
                    {"outputs", stats},
                    {"connected", connected},
                    {"wall_time_sec", timer.seconds()}};
        emit(report, output);
    } else {
        std::cout << "n=" << s.n << " edges=" << s.edge_count << " avg_degree=" << s.avg_degree
                  << " clustering_all=" << s.clustering_all
                  << " clustering_deg2=" << s.clustering_deg2 << " alpha=" << s.alpha << "\n";
    }
    return kExitOk;
}

int cmd_sparsify(const std::string& input, double epsilon, std::uint64_t seed,
                 std::optional<long long> samples, const std::string& baseline,
                 double keep_prob, bool verify, bool as_json, const std::string& output,
                 const std::string& report_path) {
    Timer timer;
    Graph g = resolve_input_graph(input);

    WeightedGraph h;
    long long m = 0;
    if (baseline.empty()) {
        SampleConfig cfg{epsilon, samples, seed};
        cfg.validate();
        m = samples ? *samples : sample_count(g, epsilon);
        h = sparsify(g, cfg);
    } else if (baseline == "percolation") {
        h = percolate(g, keep_prob, seed);
    } else {
        throw std::runtime_error("unknown baseline '" + baseline + "'");
    }

    if (!output.empty()) write_edge_list_file(output, h);

    json report{{"command", "sparsify"},
                {"input", input},
                {"parameters",
                 {{"epsilon", epsilon},
                  {"seed", seed},
                  {"m", m},
                  {"baseline", baseline.empty() ? json(nullptr) : json(baseline)}}},
                {"outputs",
                 {{"retained_edges", h.num_edges()},
                  {"total_weight", h.total_weight()},
                  {"written_to", output.empty() ? json(nullptr) : json(output)}}},
                {"wall_time_sec", 0.0}};

    bool pass = true;
    if (verify) {
        SpectralReport rep = verify_spectral(laplacian(g), laplacian(h), epsilon);
        report["outputs"]["spectral"] = spectral_report_json(rep);
        pass = rep.pass;
    }
    report["wall_time_sec"] = timer.seconds();
    if (as_json || verify) emit(report, report_path);
    if (output.empty() && !as_json && !verify) write_edge_list(std::cout, h);
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_ricci(const std::string& input, const std::string& dot_path, bool as_json,
              const std::string& output) {
    Timer timer;
    Graph g = resolve_input_graph(input);
    if (!is_connected(g)) throw std::runtime_error("ricci needs a connected graph");
    CurvatureReport rep = ricci_all(g);

    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw std::runtime_error("cannot open '" + dot_path + "' for writing");
        f << curvature_dot(g, rep);
    }

    json edges = json::array();
    auto es = g.edges();
    for (int e = 0; e < g.num_edges(); ++e)
        edges.push_back({{"i", es[e].u}, {"j", es[e].v}, {"kappa", rep.kappa[e]}});
    json report{{"command", "ricci"},
                {"input", input},
                {"parameters", json::object()},
                {"outputs",
                 {{"kappa_min", rep.kappa_min},
                  {"kappa_max", rep.kappa_max},
                  {"alpha_bound", rep.alpha_bound ? json(*rep.alpha_bound) : json(nullptr)},
                  {"edges", edges}}},
                {"wall_time_sec", timer.seconds()}};
    if (as_json) emit(report, output);
    else
        std::cout << "edges=" << g.num_edges() << " kappa_min=" << rep.kappa_min
                  << " kappa_max=" << rep.kappa_max << "\n";
    return kExitOk;
}

int cmd_hyper(const std::string& action, const std::string& input, double epsilon,
              std::uint64_t seed, std::optional<long long> samples, bool verify, bool as_json,
              const std::string& output, const std::string& report_path) {
    Timer timer;
    Hypergraph h = read_hyperedge_list_file(input).hypergraph;
    CliqueExpansion ce = clique_expand(h);

    if (action == "expand") {
        if (!output.empty()) write_edge_list_file(output, ce.graph);
        else write_edge_list(std::cout, ce.graph);
        return kExitOk;
    }

    CBoundReport bound = check_c_bound(h);
    json outputs{{"n", h.num_nodes()},
                 {"num_hyperedges", h.num_hyperedges()},
                 {"d", bound.d},
                 {"sum_inv_c", bound.sum_inv_c},
                 {"bound", bound.bound},
                 {"holds", bound.holds}};

    bool pass = true;
    if (action == "stats") {
        // nothing extra
    } else if (action == "sparsify") {
        long long m = samples ? *samples : hyper_sample_count(h, epsilon);
        WeightedGraph sp = hyper_sparsify(h, epsilon, seed, samples);
        if (!output.empty()) write_edge_list_file(output, sp);
        outputs["m"] = m;
        outputs["retained_edges"] = sp.num_edges();
        if (verify) {
            SpectralReport rep = verify_spectral(laplacian(ce.graph), laplacian(sp), epsilon);
            outputs["spectral"] = spectral_report_json(rep);
            outputs["pass"] = rep.pass;
            pass = rep.pass;
        }
    } else {
        throw std::runtime_error("unknown hyper action '" + action + "'");
    }

    json report{{"command", "hyper " + action},
                {"input", input},
                {"parameters", {{"epsilon", epsilon}, {"seed", seed}}},
                {"outputs", outputs},
                {"wall_time_sec", timer.seconds()}};
    if (as_json || action == "stats") emit(report, report_path);
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::string& input, const std::string& schemes_csv,
              const std::string& budgets_csv, int seeds, double epsilon, std::uint64_t seed0,
              bool as_json, const std::string& output) {
    Timer timer;
    Graph g = resolve_input_graph(input);
    if (!is_connected(g)) throw std::runtime_error("bench needs a connected graph");
    Matrix L = laplacian(g);
    EdgeDistribution dist = edge_probabilities(g);

    std::vector<std::string> schemes;
    for (std::size_t p = 0; p < schemes_csv.size();) {
        auto q = schemes_csv.find(',', p);
        if (q == std::string::npos) q = schemes_csv.size();
        schemes.push_back(schemes_csv.substr(p, q - p));
        p = q + 1;
    }
    std::vector<long long> budgets;
    if (budgets_csv.empty()) {
        // default grid: theorem-style budgets spanning under- to full sampling
        double base = static_cast<double>(g.num_nodes()) * std::log(g.num_nodes());
        for (double f : {1.0, 4.0, 16.0, 64.0})
            budgets.push_back(static_cast<long long>(std::ceil(f * base)));
    } else {
        for (std::size_t p = 0; p < budgets_csv.size();) {
            auto q = budgets_csv.find(',', p);
            if (q == std::string::npos) q = budgets_csv.size();
            budgets.push_back(std::stoll(budgets_csv.substr(p, q - p)));
            p = q + 1;
        }
    }

    auto median = [](std::vector<double> v) {
        size_t mid = v.size() / 2;
        std::nth_element(v.begin(), v.begin() + mid, v.end());
        return v[mid];
    };

    json rows = json::array();
    for (long long m : budgets) {
        double expected = expected_distinct_edges(dist, m);
        for (const std::string& scheme : schemes) {
            std::vector<double> distortion, retained;
            for (int s = 0; s < seeds; ++s) {
                std::uint64_t sd = seed0 + static_cast<std::uint64_t>(s);
                WeightedGraph h;
                if (scheme == "common-neighbor") {
                    h = sparsify(g, {epsilon, m, sd});
                } else if (scheme == "percolation") {
                    double q = std::min(1.0, expected / g.num_edges());
                    h = percolate(g, q, sd);
                } else {
                    throw std::runtime_error("unknown scheme '" + scheme + "'");
                }
                distortion.push_back(verify_spectral(L, laplacian(h), epsilon).distortion);
                retained.push_back(static_cast<double>(h.num_edges()));
            }
            rows.push_back({{"scheme", scheme},
                            {"budget", m},
                            {"matched_expected_edges", expected},
                            {"median_retained", median(retained)},
                            {"median_distortion", median(distortion)}});
        }
    }
    json report{{"command", "bench"},
                {"input", input},
                {"parameters",
                 {{"epsilon", epsilon}, {"seed", seed0}, {"seeds", seeds}}},
                {"outputs", {{"rows", rows}}},
                {"wall_time_sec", timer.seconds()}};
    emit(report, output);
    (void)as_json;
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, int d, double p, int k, std::uint64_t seed,
            const std::string& output) {
    if (family == "tightness") {
        Hypergraph h = gen_tightness_design(k);
        if (!output.empty()) write_hyperedge_list_file(output, h);
        else write_hyperedge_list(std::cout, h);
        return kExitOk;
    }
    Graph g;
    if (family == "complete") g = gen_complete(n);
    else if (family == "path") g = gen_path(n);
    else if (family == "regular") g = gen_random_regular(n, d, seed);
    else if (family == "er") g = gen_erdos_renyi(n, p, seed);
    else if (family == "remark-union") g = gen_remark_union(n, d, seed);
    else throw std::runtime_error("unknown family '" + family + "'");
    if (!output.empty()) write_edge_list_file(output, g);
    else write_edge_list(std::cout, g);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"common-neighbor graph sparsification toolkit"};
    app.require_subcommand(1);

    std::string input, output, report_path, dot_path, baseline, schemes = "common-neighbor,percolation";
    std::string budgets_csv, family;
    double epsilon = 0.5, keep_prob = 0.5, er_p = 0.1;
    std::uint64_t seed = 1;
    long long samples = -1;
    int seeds = 20, gen_n = 10, gen_d = 3, gen_k = 3;
    bool verify = false, as_json = false;

    auto* stats = app.add_subcommand("stats", "local statistics of a graph");
    stats->add_option("--input", input, "edge list path or builtin:NAME")->required();
    stats->add_flag("--json", as_json, "emit the full JSON report");
    stats->add_option("--output", report_path, "write the report here instead of stdout");

    auto* sparsify_cmd = app.add_subcommand("sparsify", "sample a spectral sparsifier");
    sparsify_cmd->add_option("--input", input)->required();
    sparsify_cmd->add_option("--epsilon", epsilon, "target distortion in (0,1)");
    sparsify_cmd->add_option("--seed", seed);
    sparsify_cmd->add_option("--samples", samples, "override the sample budget m");
    sparsify_cmd->add_option("--baseline", baseline, "use a baseline scheme: percolation");
    sparsify_cmd->add_option("--keep-prob", keep_prob, "edge keep probability for percolation");
    sparsify_cmd->add_option("--output", output, "write the weighted edge list here");
    sparsify_cmd->add_option("--report", report_path, "write the JSON report here");
    sparsify_cmd->add_flag("--verify", verify, "certify the result spectrally");
    sparsify_cmd->add_flag("--json", as_json);

    auto* ricci = app.add_subcommand("ricci", "per-edge Ricci curvature");
    ricci->add_option("--input", input)->required();
    ricci->add_option("--dot", dot_path, "write a DOT rendering here");
    ricci->add_option("--output", report_path);
    ricci->add_flag("--json", as_json);

    auto* hyper = app.add_subcommand("hyper", "hypergraph pipeline");
    std::string hyper_action;
    hyper->add_option("action", hyper_action, "expand | stats | sparsify")->required();
    hyper->add_option("--input", input, "hyperedge list path")->required();
    hyper->add_option("--epsilon", epsilon);
    hyper->add_option("--seed", seed);
    hyper->add_option("--samples", samples);
    hyper->add_option("--output", output);
    hyper->add_option("--report", report_path);
    hyper->add_flag("--verify", verify);
    hyper->add_flag("--json", as_json);

    auto* bench = app.add_subcommand("bench", "compare sampling schemes over a budget grid");
    bench->add_option("--input", input)->required();
    bench->add_option("--schemes", schemes, "comma-separated: common-neighbor,percolation");
    bench->add_option("--budgets", budgets_csv, "comma-separated sample counts");
    bench->add_option("--seeds", seeds, "seeds per cell");
    bench->add_option("--epsilon", epsilon);
    bench->add_option("--seed", seed);
    bench->add_option("--output", report_path);
    bench->add_flag("--json", as_json);

    auto* gen = app.add_subcommand("gen", "graph and hypergraph generators");
    gen->add_option("family", family, "complete | path | regular | er | remark-union | tightness")
        ->required();
    gen->add_option("--n", gen_n);
    gen->add_option("--d", gen_d);
    gen->add_option("--p", er_p);
    gen->add_option("--k", gen_k);
    gen->add_option("--seed", seed);
    gen->add_option("--output", output);

    try {
        app.parse(argc, argv);
        std::optional<long long> samples_opt;
        if (samples >= 0) samples_opt = samples;
        if (stats->parsed()) return cmd_stats(input, as_json, report_path);
        if (sparsify_cmd->parsed())
            return cmd_sparsify(input, epsilon, seed, samples_opt, baseline, keep_prob, verify,
                                as_json, output, report_path);
        if (ricci->parsed()) return cmd_ricci(input, dot_path, as_json, report_path);
        if (hyper->parsed())
            return cmd_hyper(hyper_action, input, epsilon, seed, samples_opt, verify, as_json,
                             output, report_path);
        if (bench->parsed())
            return cmd_bench(input, schemes, budgets_csv, seeds, epsilon, seed, as_json,
                             report_path);
        if (gen->parsed()) return cmd_gen(family, gen_n, gen_d, er_p, gen_k, seed, output);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
