#include "cnsparse/clique_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace cnsparse {

CliqueExpansion clique_expand(const Hypergraph& h) {
    // weight (hyperedge count) and C score (sum of containing sizes) per pair
    std::map<std::pair<int, int>, std::pair<long long, long long>> pairs;
    for (const auto& e : h.hyperedges()) {
        auto size = static_cast<long long>(e.size());
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto& entry = pairs[{e[a], e[b]}];
                entry.first += 1;
                entry.second += size;
            }
    }
    std::vector<std::tuple<int, int, double>> weighted;
    std::vector<long long> scores;
    weighted.reserve(pairs.size());
    scores.reserve(pairs.size());
    for (const auto& [pr, entry] : pairs) {
        weighted.push_back({pr.first, pr.second, static_cast<double>(entry.first)});
        scores.push_back(entry.second);
    }
    CliqueExpansion expansion;
    expansion.graph = WeightedGraph::from_edges(h.num_nodes(), weighted);
    // WeightedGraph sorts edges the same way the map iterates (u, then v),
    // so the score vector is already aligned.
    expansion.c_scores = std::move(scores);
    return expansion;
}

EdgeDistribution hyper_probabilities(const CliqueExpansion& expansion) {
    if (expansion.graph.num_edges() == 0)
        throw std::invalid_argument("clique expansion has no edges");
    EdgeDistribution dist;
    dist.edges.reserve(expansion.graph.num_edges());
    for (const auto& e : expansion.graph.edges()) dist.edges.push_back({e.u, e.v});
    dist.probs.resize(expansion.c_scores.size());
    double total = 0.0;
    for (std::size_t e = 0; e < expansion.c_scores.size(); ++e) {
        dist.probs[e] = 1.0 / static_cast<double>(expansion.c_scores[e]);
        total += dist.probs[e];
    }
    for (double& p : dist.probs) p /= total;
    return dist;
}

CBoundReport check_c_bound(const Hypergraph& h) {
    CliqueExpansion expansion = clique_expand(h);
    CBoundReport report;
    for (long long c : expansion.c_scores) report.sum_inv_c += 1.0 / static_cast<double>(c);
    report.d = h.max_membership();
    report.bound = static_cast<double>(report.d) * h.num_nodes() / 2.0;
    report.holds = report.sum_inv_c <= report.bound + 1e-9;
    return report;
}

namespace {

bool is_prime(int k) {
    if (k < 2) return false;
    for (int p = 2; p * p <= k; ++p)
        if (k % p == 0) return false;
    return true;
}

// Rows 0..k-1 of k nodes each; hyperedge (i,j) takes position j + r*i
// (mod k) in row r. For prime k any two hyperedges share at most one node.
Hypergraph shift_design(int k) {
    std::vector<std::vector<int>> hyperedges;
    hyperedges.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<int> e(k);
            for (int r = 0; r < k; ++r) e[r] = r * k + (j + r * i) % k;
            hyperedges.push_back(std::move(e));
        }
    return Hypergraph::from_hyperedges(k * k, std::move(hyperedges));
}

// Translates of a set with all pairwise differences distinct mod k^2;
// the k^2 translates then cover every pair at most once.
Hypergraph ruler_design(int k, const std::vector<int>& ruler) {
    const int n = k * k;
    std::vector<std::vector<int>> hyperedges;
    hyperedges.reserve(n);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e;
        e.reserve(ruler.size());
        for (int mark : ruler) e.push_back((mark + t) % n);
        hyperedges.push_back(std::move(e));
    }
    return Hypergraph::from_hyperedges(n, std::move(hyperedges));
}

}  // namespace

Hypergraph gen_tightness_design(int k) {
    if (k < 2) throw std::invalid_argument("tightness design needs k >= 2");
    if (is_prime(k)) return shift_design(k);
    if (k == 4) return ruler_design(4, {0, 1, 4, 6});
    if (k == 6) return ruler_design(6, {0, 1, 4, 10, 12, 17});
    throw std::invalid_argument("no tight design available for composite k = " +
                                std::to_string(k));
}

long long hyper_sample_count(const Hypergraph& h, double epsilon) {
    if (h.num_nodes() < 2) throw std::invalid_argument("need at least 2 nodes");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie strictly in (0,1)");
    double m = 4.0 * h.max_membership() * h.num_nodes() *
               std::log(static_cast<double>(h.num_nodes())) / (epsilon * epsilon);
    return static_cast<long long>(std::ceil(m));
}

WeightedGraph hyper_sparsify(const Hypergraph& h, double epsilon, std::uint64_t seed,
                             std::optional<long long> m_override) {
    CliqueExpansion expansion = clique_expand(h);
    if (!is_connected(expansion.graph))
        throw std::invalid_argument("hyper_sparsify requires a connected clique expansion");
    EdgeDistribution dist = hyper_probabilities(expansion);
    long long m = m_override ? *m_override : hyper_sample_count(h, epsilon);
    if (m <= 0) throw std::invalid_argument("sample count must be positive");

    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t e = 0; e < dist.probs.size(); ++e) {
        acc += dist.probs[e];
        cdf[e] = acc;
    }
    cdf.back() = 1.0;

    std::mt19937_64 rng(seed);
    std::vector<long long> hits(dist.probs.size(), 0);
    for (long long k = 0; k < m; ++k) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        hits[std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1)]++;
    }
    std::vector<std::tuple<int, int, double>> weighted;
    for (std::size_t e = 0; e < hits.size(); ++e) {
        if (hits[e] == 0) continue;
        double w = static_cast<double>(hits[e]) / (static_cast<double>(m) * dist.probs[e]);
        weighted.push_back({dist.edges[e].u, dist.edges[e].v, w});
    }
    return WeightedGraph::from_edges(h.num_nodes(), weighted);
}

}  // namespace cnsparse
