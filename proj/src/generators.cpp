#include "cnsparse/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace cnsparse {

namespace {

// 53-bit uniform in [0,1); keeps draws independent of library internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

Graph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0) throw std::invalid_argument("need n >= 1 and d >= 0");
    if (d >= n) throw std::invalid_argument("regular graph needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("regular graph needs n*d even");
    if (d == 0) return Graph::from_edges(n, {});

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;

    // Rejection sampling is exact but its acceptance rate decays like
    // exp(-(d^2-1)/4), so this is a small-d generator.
    const long long max_attempts = 2000000;
    for (long long attempt = 0; attempt < max_attempts; ++attempt) {
        // Fisher-Yates with our own uniform so the result is seed-stable.
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(i + 1));
            if (j > i) j = i;
            std::swap(stubs[i], stubs[j]);
        }
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            auto e = std::minmax(a, b);
            if (!seen.insert({e.first, e.second}).second) { ok = false; break; }
        }
        if (ok) {
            std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
            return Graph::from_edges(n, edges);
        }
    }
    throw std::runtime_error(
        "pairing model failed to produce a simple graph (d too large for rejection sampling)");
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < p) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

Graph gen_remark_union(int n, int d, std::uint64_t seed) {
    Graph regular = gen_random_regular(n, d, seed);
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : regular.edges()) edges.push_back({e.u, e.v});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({n + i, n + j});
    edges.push_back({0, n});  // fixed bridge keeps the output deterministic
    return Graph::from_edges(2 * n, edges);
}

}  // namespace cnsparse
