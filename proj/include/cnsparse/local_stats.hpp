#pragma once

#include <vector>

#include "cnsparse/graph.hpp"

namespace cnsparse {

/// Per-edge common-neighbor counts, clustering coefficients, and the
/// local-connectivity statistic alpha = (1/n) sum_edges 2/(T_ij + 2).
struct LocalStats {
    std::vector<int> common_neighbors;   // parallel to g.edges()
    std::vector<double> clustering_local;  // c_i, 0 when degree <= 1
    double clustering_all = 0.0;    // mean of c_i over all nodes
    double clustering_deg2 = 0.0;   // mean of c_i over nodes with degree >= 2
    double alpha = 0.0;
    double alpha_sum = 0.0;         // unnormalized: sum_edges 2/(T_ij + 2)
    int n = 0;
    int edge_count = 0;
    double avg_degree = 0.0;
};

/// T_ij = |N_i ∩ N_j| for every edge, via sorted-adjacency merge.
/// Parallelized over edges; counts land in fixed slots so the result is
/// identical for any thread count.
std::vector<int> common_neighbor_counts(const Graph& g);

/// Serial reference for the kernel above; kept for tests and benchmarks.
std::vector<int> common_neighbor_counts_serial(const Graph& g);

LocalStats compute_local_stats(const Graph& g);

double alpha(const Graph& g);

/// Lemma-style floor for alpha: 1 / (4c + (2/n) sum_i 1/d_i), with c the
/// all-nodes clustering mean. Requires every node to have degree >= 1.
double alpha_lower_bound(const Graph& g);
double alpha_lower_bound(const LocalStats& stats, const Graph& g);

}  // namespace cnsparse
