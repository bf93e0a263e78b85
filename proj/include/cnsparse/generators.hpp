#pragma once

#include <cstdint>

#include "cnsparse/graph.hpp"

namespace cnsparse {

Graph gen_complete(int n);
Graph gen_path(int n);

/// Random d-regular graph via the pairing model; pairings with self-loops
/// or multi-edges are rejected and redrawn. Requires n*d even and d < n.
Graph gen_random_regular(int n, int d, std::uint64_t seed);

/// G(n, p): each pair kept independently with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

/// 2n nodes: a random d-regular graph on 0..n-1, a complete graph on
/// n..2n-1, and the bridging edge (0, n).
Graph gen_remark_union(int n, int d, std::uint64_t seed);

}  // namespace cnsparse
