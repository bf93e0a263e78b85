#pragma once

#include <span>
#include <vector>

namespace cnsparse {

/// Immutable hypergraph: nodes 0..n-1 plus a list of hyperedges, each a set
/// of at least two distinct nodes. Duplicate hyperedges are allowed (the
/// edge list is a multiset); hyperedges of size one are rejected.
class Hypergraph {
  public:
    Hypergraph() = default;

    static Hypergraph from_hyperedges(int n, std::vector<std::vector<int>> hyperedges);

    int num_nodes() const { return n_; }
    int num_hyperedges() const { return static_cast<int>(hyperedges_.size()); }
    std::span<const std::vector<int>> hyperedges() const { return hyperedges_; }

    /// Number of hyperedges containing node v.
    int membership(int v) const;
    /// Max membership over all nodes (the d of the per-node bound).
    int max_membership() const;

  private:
    int n_ = 0;
    std::vector<std::vector<int>> hyperedges_;  // each sorted ascending
    std::vector<int> membership_;
};

}  // namespace cnsparse
