#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cnsparse/graph.hpp"

namespace cnsparse {

struct SampleConfig {
    double epsilon = 0.5;                     // must lie strictly in (0,1)
    std::optional<long long> m_override;      // replaces the theorem budget
    std::uint64_t seed = 0;

    void validate() const;
};

/// Sampling distribution over the edges of a graph; probabilities are
/// positive and sum to 1.
struct EdgeDistribution {
    std::vector<Edge> edges;
    std::vector<double> probs;
};

/// p_ij proportional to 2/(T_ij + 2): triangle-rich edges are sampled less.
EdgeDistribution edge_probabilities(const Graph& g, std::span<const int> common_counts);
EdgeDistribution edge_probabilities(const Graph& g);

/// Budget m = ceil(8 * alpha * n * ln(n) / eps^2); natural logarithm.
long long sample_count(const Graph& g, double epsilon);
long long sample_count_from_alpha(double alpha, int n, double epsilon);

/// Draw m edges with replacement from the common-neighbor distribution and
/// accumulate weight 1/(m p_e) per hit. Deterministic given the seed.
/// Requires a connected input graph.
WeightedGraph sparsify(const Graph& g, const SampleConfig& cfg);

/// Keep every edge independently with probability keep_prob at weight 1.
WeightedGraph percolate(const Graph& g, double keep_prob, std::uint64_t seed);

/// Expected number of distinct edges after m draws from dist.
double expected_distinct_edges(const EdgeDistribution& dist, long long m);

}  // namespace cnsparse
