#include "cnsparse/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cnsparse/local_stats.hpp"

namespace cnsparse {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void SampleConfig::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie strictly in (0,1)");
    if (m_override && *m_override <= 0)
        throw std::invalid_argument("sample count override must be positive");
}

EdgeDistribution edge_probabilities(const Graph& g, std::span<const int> common_counts) {
    if (g.num_edges() == 0)
        throw std::invalid_argument("edge_probabilities needs at least one edge");
    if (static_cast<int>(common_counts.size()) != g.num_edges())
        throw std::invalid_argument("common-neighbor counts do not cover the edge set");
    EdgeDistribution dist;
    dist.edges.assign(g.edges().begin(), g.edges().end());
    dist.probs.resize(common_counts.size());
    double total = 0.0;
    for (std::size_t e = 0; e < common_counts.size(); ++e) {
        dist.probs[e] = 2.0 / (common_counts[e] + 2);
        total += dist.probs[e];
    }
    for (double& p : dist.probs) p /= total;
    return dist;
}

EdgeDistribution edge_probabilities(const Graph& g) {
    auto counts = common_neighbor_counts(g);
    return edge_probabilities(g, counts);
}

long long sample_count_from_alpha(double alpha_value, int n, double epsilon) {
    if (n < 2) throw std::invalid_argument("sample_count needs n >= 2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie strictly in (0,1)");
    double m = 8.0 * alpha_value * n * std::log(static_cast<double>(n)) / (epsilon * epsilon);
    return static_cast<long long>(std::ceil(m));
}

long long sample_count(const Graph& g, double epsilon) {
    return sample_count_from_alpha(alpha(g), g.num_nodes(), epsilon);
}

WeightedGraph sparsify(const Graph& g, const SampleConfig& cfg) {
    cfg.validate();
    if (!is_connected(g))
        throw std::invalid_argument("sparsify requires a connected graph");
    EdgeDistribution dist = edge_probabilities(g);
    long long m = cfg.m_override ? *cfg.m_override : sample_count(g, cfg.epsilon);

    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t e = 0; e < dist.probs.size(); ++e) {
        acc += dist.probs[e];
        cdf[e] = acc;
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(cfg.seed);
    std::vector<long long> hits(dist.probs.size(), 0);
    for (long long k = 0; k < m; ++k) {
        double u = uniform01(rng);
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t e = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
        hits[e]++;
    }

    std::vector<std::tuple<int, int, double>> weighted;
    for (std::size_t e = 0; e < hits.size(); ++e) {
        if (hits[e] == 0) continue;
        double w = static_cast<double>(hits[e]) / (static_cast<double>(m) * dist.probs[e]);
        weighted.push_back({dist.edges[e].u, dist.edges[e].v, w});
    }
    return WeightedGraph::from_edges(g.num_nodes(), weighted);
}

WeightedGraph percolate(const Graph& g, double keep_prob, std::uint64_t seed) {
    if (keep_prob < 0.0 || keep_prob > 1.0)
        throw std::invalid_argument("keep_prob must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::tuple<int, int, double>> kept;
    for (const Edge& e : g.edges())
        if (uniform01(rng) < keep_prob) kept.push_back({e.u, e.v, 1.0});
    return WeightedGraph::from_edges(g.num_nodes(), kept);
}

double expected_distinct_edges(const EdgeDistribution& dist, long long m) {
    double expected = 0.0;
    for (double p : dist.probs)
        expected += 1.0 - std::pow(1.0 - p, static_cast<double>(m));
    return expected;
}

}  // namespace cnsparse
