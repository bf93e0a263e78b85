#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnsparse/graph.hpp"

namespace cnsparse {

/// Uniform probability measure on the neighbors of a node: mass 1/d on
/// each element of the support.
struct NeighborMeasure {
    int node = -1;
    std::vector<int> support;
};
NeighborMeasure neighbor_measure(const Graph& g, int v);

/// Hop distances from source; -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Rows of hop distances from each requested source. Throws if any pair
/// is unreachable.
std::vector<std::vector<int>> graph_distance(const Graph& g, std::span<const int> sources);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Exact 1-Wasserstein distance between the neighbor measures of i and j.
/// Masses are scaled to integers (lcm of the two degrees), so the optimum
/// is an exact rational.
Rational w1_exact(const Graph& g, int i, int j);
double w1(const Graph& g, int i, int j);

/// kappa(i,j) = 1 - W1(m_i, m_j) for an edge (i,j); non-edges are refused.
double ricci_edge(const Graph& g, int i, int j);

struct CurvatureReport {
    std::vector<double> kappa;  // parallel to g.edges()
    double kappa_min = 0.0;
    double kappa_max = 0.0;
    std::optional<double> alpha_bound;  // 1/kappa_min when kappa_min > 0
};

/// Curvature of every edge; per-edge transport problems run in parallel.
CurvatureReport ricci_all(const Graph& g);
/// Serial reference implementation, kept for tests and benchmarks.
CurvatureReport ricci_all_serial(const Graph& g);

struct AlphaUpperBoundCheck {
    double kappa_min = 0.0;
    bool applicable = false;  // kappa_min > 0
    bool holds = true;        // alpha <= 1/kappa_min (vacuously true otherwise)
};
AlphaUpperBoundCheck alpha_upper_bound_check(const Graph& g);

/// DOT rendering with curvature-coded edges: negative blue, positive red,
/// near-zero black; penwidth scales with |kappa|.
std::string curvature_dot(const Graph& g, const CurvatureReport& report,
                          const std::string& graph_name = "ricci");

}  // namespace cnsparse
