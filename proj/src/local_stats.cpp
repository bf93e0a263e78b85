#include "cnsparse/local_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnsparse {

namespace {

int sorted_intersection_size(std::span<const int> a, std::span<const int> b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

}  // namespace

std::vector<int> common_neighbor_counts_serial(const Graph& g) {
    std::vector<int> counts(g.num_edges());
    auto edges = g.edges();
    for (int e = 0; e < g.num_edges(); ++e)
        counts[e] = sorted_intersection_size(g.neighbors(edges[e].u), g.neighbors(edges[e].v));
    return counts;
}

std::vector<int> common_neighbor_counts(const Graph& g) {
    std::vector<int> counts(g.num_edges());
    auto edges = g.edges();
    const int m = g.num_edges();
#pragma omp parallel for schedule(dynamic, 64)
    for (int e = 0; e < m; ++e)
        counts[e] = sorted_intersection_size(g.neighbors(edges[e].u), g.neighbors(edges[e].v));
    return counts;
}

LocalStats compute_local_stats(const Graph& g) {
    LocalStats s;
    s.n = g.num_nodes();
    s.edge_count = g.num_edges();
    s.avg_degree = g.average_degree();
    s.common_neighbors = common_neighbor_counts(g);

    // alpha: reduce in fixed edge order, independent of thread count.
    double sum = 0.0;
    for (int t : s.common_neighbors) sum += 2.0 / (t + 2);
    s.alpha_sum = sum;
    s.alpha = s.n > 0 ? sum / s.n : 0.0;

    // 2*t_i = sum over incident edges of T_ij: each triangle at i is seen
    // from both of its edges at i.
    std::vector<long long> twice_triangles(s.n, 0);
    auto edges = g.edges();
    for (int e = 0; e < s.edge_count; ++e) {
        twice_triangles[edges[e].u] += s.common_neighbors[e];
        twice_triangles[edges[e].v] += s.common_neighbors[e];
    }
    s.clustering_local.assign(s.n, 0.0);
    double sum_all = 0.0, sum_deg2 = 0.0;
    int count_deg2 = 0;
    for (int i = 0; i < s.n; ++i) {
        long long d = g.degree(i);
        if (d >= 2) {
            s.clustering_local[i] = static_cast<double>(twice_triangles[i]) / (d * (d - 1));
            sum_deg2 += s.clustering_local[i];
            ++count_deg2;
        }
        sum_all += s.clustering_local[i];
    }
    s.clustering_all = s.n > 0 ? sum_all / s.n : 0.0;
    s.clustering_deg2 = count_deg2 > 0 ? sum_deg2 / count_deg2 : 0.0;
    return s;
}

double alpha(const Graph& g) {
    if (g.num_nodes() == 0) return 0.0;
    auto counts = common_neighbor_counts(g);
    double sum = 0.0;
    for (int t : counts) sum += 2.0 / (t + 2);
    return sum / g.num_nodes();
}

double alpha_lower_bound(const LocalStats& stats, const Graph& g) {
    double inv_deg_sum = 0.0;
    for (int i = 0; i < g.num_nodes(); ++i) {
        int d = g.degree(i);
        if (d == 0) throw std::invalid_argument("alpha_lower_bound needs every degree >= 1");
        inv_deg_sum += 1.0 / d;
    }
    return 1.0 / (4.0 * stats.clustering_all + (2.0 / g.num_nodes()) * inv_deg_sum);
}

double alpha_lower_bound(const Graph& g) {
    if (g.num_nodes() == 0) throw std::invalid_argument("alpha_lower_bound needs nodes");
    return alpha_lower_bound(compute_local_stats(g), g);
}

}  // namespace cnsparse
