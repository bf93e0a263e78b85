#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cnsparse {

/// Unordered edge, stored with u < v.
struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable undirected simple graph. Nodes are 0..n-1, edges are kept
/// sorted and deduplicated; adjacency lists are sorted per node.
class Graph {
  public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    double average_degree() const {
        return n_ == 0 ? 0.0 : 2.0 * num_edges() / n_;
    }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const int> neighbors(int v) const {
        check_node(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_node(v);
        return static_cast<int>(adj_[v].size());
    }
    bool has_edge(int a, int b) const;
    /// Index of edge (a,b) in edges(), if present.
    std::optional<int> edge_index(int a, int b) const;

  private:
    void check_node(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("node id out of range");
    }
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Immutable undirected graph with positive edge weights.
class WeightedGraph {
  public:
    struct WEdge {
        int u;
        int v;
        double w;
    };

    WeightedGraph() = default;

    /// Weights of repeated pairs are summed.
    static WeightedGraph from_edges(int n, const std::vector<std::tuple<int, int, double>>& triples);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    std::span<const WEdge> edges() const { return edges_; }
    std::span<const std::pair<int, double>> neighbors(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("node id out of range");
        return adj_[v];
    }
    double weighted_degree(int v) const;
    double total_weight() const;

  private:
    int n_ = 0;
    std::vector<WEdge> edges_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// True iff g has a single connected component (BFS reachability).
/// Empty and single-node graphs count as connected.
bool is_connected(const Graph& g);
bool is_connected(const WeightedGraph& g);

}  // namespace cnsparse
