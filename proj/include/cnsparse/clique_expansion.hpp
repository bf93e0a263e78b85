#pragma once

#include <cstdint>
#include <optional>

#include "cnsparse/graph.hpp"
#include "cnsparse/hypergraph.hpp"
#include "cnsparse/sampler.hpp"

namespace cnsparse {

/// Weighted graph induced by a hypergraph: w_ij counts the hyperedges
/// containing both endpoints, and the score C_ij sums their sizes.
struct CliqueExpansion {
    WeightedGraph graph;
    std::vector<long long> c_scores;  // parallel to graph.edges()
};

CliqueExpansion clique_expand(const Hypergraph& h);

/// Sampling distribution proportional to 1/C_ij over expansion edges.
EdgeDistribution hyper_probabilities(const CliqueExpansion& expansion);

struct CBoundReport {
    double sum_inv_c = 0.0;
    int d = 0;          // max per-node hyperedge membership
    double bound = 0.0; // d * n / 2
    bool holds = false;
};
CBoundReport check_c_bound(const Hypergraph& h);

/// Design on k^2 nodes with k^2 hyperedges of size k, every node in
/// exactly k of them and every pair in at most one, which makes
/// sum 1/C_ij = (k-1)k^2/2. Prime k uses cyclic row shifts; k = 4 and 6
/// use translates of a perfect-difference ruler (the shift family stops
/// being pairwise-disjoint for composite k). Other composite k are refused.
Hypergraph gen_tightness_design(int k);

/// Budget m = ceil(4 d n ln(n) / eps^2).
long long hyper_sample_count(const Hypergraph& h, double epsilon);

/// Sparsify the clique expansion: m draws with replacement from
/// hyper_probabilities, weight 1/(m P_ij) per hit, repeats summed.
WeightedGraph hyper_sparsify(const Hypergraph& h, double epsilon, std::uint64_t seed,
                             std::optional<long long> m_override = std::nullopt);

}  // namespace cnsparse
