#include "cnsparse/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cnsparse/local_stats.hpp"
#include "cnsparse/transport.hpp"

namespace cnsparse {

NeighborMeasure neighbor_measure(const Graph& g, int v) {
    if (g.degree(v) < 1)
        throw std::invalid_argument("neighbor measure undefined for isolated node");
    NeighborMeasure m;
    m.node = v;
    auto nbrs = g.neighbors(v);
    m.support.assign(nbrs.begin(), nbrs.end());
    return m;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.num_nodes(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> graph_distance(const Graph& g, std::span<const int> sources) {
    std::vector<std::vector<int>> rows;
    rows.reserve(sources.size());
    for (int s : sources) {
        rows.push_back(bfs_distances(g, s));
        for (int d : rows.back())
            if (d < 0)
                throw std::runtime_error("unreachable pair: graph is disconnected");
    }
    return rows;
}

namespace {

// W1 with caller-provided distance rows (dist_from[k] = distances from k).
Rational w1_from_rows(const Graph& g, int i, int j,
                      const std::vector<std::vector<int>>& dist_rows) {
    if (i == j) return {0, 1};
    NeighborMeasure mi = neighbor_measure(g, i);
    NeighborMeasure mj = neighbor_measure(g, j);
    long long di = static_cast<long long>(mi.support.size());
    long long dj = static_cast<long long>(mj.support.size());
    long long scale = std::lcm(di, dj);

    TransportProblem tp;
    tp.supply.assign(mi.support.size(), scale / di);
    tp.demand.assign(mj.support.size(), scale / dj);
    tp.cost.assign(mi.support.size(), std::vector<long long>(mj.support.size(), 0));
    for (std::size_t a = 0; a < mi.support.size(); ++a) {
        const auto& row = dist_rows[mi.support[a]];
        for (std::size_t b = 0; b < mj.support.size(); ++b) {
            int d = row[mj.support[b]];
            if (d < 0) throw std::runtime_error("unreachable pair: graph is disconnected");
            tp.cost[a][b] = d;
        }
    }
    long long cost = min_cost_transport(tp);
    long long common = std::gcd(cost, scale);
    if (common == 0) common = 1;
    return {cost / common, scale / common};
}

}  // namespace

Rational w1_exact(const Graph& g, int i, int j) {
    if (i == j) return {0, 1};
    NeighborMeasure mi = neighbor_measure(g, i);
    std::vector<std::vector<int>> rows(g.num_nodes());
    for (int k : mi.support) rows[k] = bfs_distances(g, k);
    (void)neighbor_measure(g, j);  // degree check
    return w1_from_rows(g, i, j, rows);
}

double w1(const Graph& g, int i, int j) { return w1_exact(g, i, j).value(); }

double ricci_edge(const Graph& g, int i, int j) {
    if (!g.has_edge(i, j))
        throw std::invalid_argument("ricci_edge is defined for edges only");
    return 1.0 - w1(g, i, j);
}

namespace {

std::vector<std::vector<int>> all_pairs_bfs(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<std::vector<int>> rows(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (int s = 0; s < n; ++s) rows[s] = bfs_distances(g, s);
    return rows;
}

CurvatureReport build_report(const Graph& g, std::vector<double> kappa) {
    CurvatureReport rep;
    rep.kappa = std::move(kappa);
    if (rep.kappa.empty()) return rep;
    rep.kappa_min = *std::min_element(rep.kappa.begin(), rep.kappa.end());
    rep.kappa_max = *std::max_element(rep.kappa.begin(), rep.kappa.end());
    if (rep.kappa_min > 0.0) rep.alpha_bound = 1.0 / rep.kappa_min;
    return rep;
}

}  // namespace

CurvatureReport ricci_all(const Graph& g) {
    auto rows = all_pairs_bfs(g);
    auto edges = g.edges();
    const int m = g.num_edges();
    std::vector<double> kappa(m);
#pragma omp parallel for schedule(dynamic, 4)
    for (int e = 0; e < m; ++e)
        kappa[e] = 1.0 - w1_from_rows(g, edges[e].u, edges[e].v, rows).value();
    return build_report(g, std::move(kappa));
}

CurvatureReport ricci_all_serial(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<std::vector<int>> rows(n);
    for (int s = 0; s < n; ++s) rows[s] = bfs_distances(g, s);
    auto edges = g.edges();
    std::vector<double> kappa(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        kappa[e] = 1.0 - w1_from_rows(g, edges[e].u, edges[e].v, rows).value();
    return build_report(g, std::move(kappa));
}

AlphaUpperBoundCheck alpha_upper_bound_check(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("alpha_upper_bound_check requires a connected graph");
    CurvatureReport rep = ricci_all(g);
    AlphaUpperBoundCheck check;
    check.kappa_min = rep.kappa_min;
    check.applicable = rep.kappa_min > 0.0;
    if (check.applicable)
        check.holds = alpha(g) <= 1.0 / rep.kappa_min + 1e-9;
    return check;
}

std::string curvature_dot(const Graph& g, const CurvatureReport& report,
                          const std::string& graph_name) {
    constexpr double kZeroTol = 1e-9;
    double absmax = 0.0;
    for (double k : report.kappa) absmax = std::max(absmax, std::abs(k));
    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    out << "  node [shape=circle fontsize=10];\n";
    auto edges = g.edges();
    char buf[160];
    for (int e = 0; e < g.num_edges(); ++e) {
        double k = report.kappa[e];
        const char* color = std::abs(k) < kZeroTol ? "black" : (k < 0 ? "blue" : "red");
        double width = absmax > 0.0 ? 0.2 + 4.8 * std::abs(k) / absmax : 1.0;
        std::snprintf(buf, sizeof buf, "  %d -- %d [color=%s penwidth=%.3f kappa=%.6f];\n",
                      edges[e].u, edges[e].v, color, width, k);
        out << buf;
    }
    out << "}\n";
    return out.str();
}

}  // namespace cnsparse
