#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnsparse/generators.hpp"
#include "cnsparse/local_stats.hpp"

using namespace cnsparse;

namespace {

// O(n^3) oracle: for each edge scan all nodes for joint adjacency.
std::vector<int> brute_force_common_neighbors(const Graph& g) {
    std::vector<int> counts;
    for (const Edge& e : g.edges()) {
        int c = 0;
        for (int k = 0; k < g.num_nodes(); ++k)
            if (k != e.u && k != e.v && g.has_edge(e.u, k) && g.has_edge(e.v, k)) ++c;
        counts.push_back(c);
    }
    return counts;
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::from_edges(leaves + 1, edges);
}

}  // namespace

TEST_CASE("common neighbors on small fixtures") {
    Graph k3 = gen_complete(3);
    for (int t : common_neighbor_counts(k3)) CHECK(t == 1);
    Graph p3 = gen_path(3);
    for (int t : common_neighbor_counts(p3)) CHECK(t == 0);
    Graph k5 = gen_complete(5);
    for (int t : common_neighbor_counts(k5)) CHECK(t == 3);
}

TEST_CASE("parallel kernel matches serial reference and brute force") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        Graph g = gen_erdos_renyi(50, 0.12, seed);
        auto par = common_neighbor_counts(g);
        auto ser = common_neighbor_counts_serial(g);
        auto ref = brute_force_common_neighbors(g);
        REQUIRE(par.size() == ref.size());
        for (std::size_t e = 0; e < ref.size(); ++e) {
            CHECK(par[e] == ref[e]);
            CHECK(ser[e] == ref[e]);
        }
    }
}

TEST_CASE("T_ij bounds") {
    Graph g = gen_erdos_renyi(60, 0.1, 11);
    auto counts = common_neighbor_counts(g);
    auto edges = g.edges();
    for (std::size_t e = 0; e < counts.size(); ++e) {
        CHECK(counts[e] <= std::min(g.degree(edges[e].u), g.degree(edges[e].v)) - 1);
        CHECK(counts[e] <= g.num_nodes() - 2);
    }
}

TEST_CASE("incident common-neighbor sums count each triangle twice per node") {
    Graph g = gen_erdos_renyi(40, 0.2, 21);
    LocalStats s = compute_local_stats(g);
    auto edges = g.edges();
    std::vector<long long> sum_t(g.num_nodes(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        sum_t[edges[e].u] += s.common_neighbors[e];
        sum_t[edges[e].v] += s.common_neighbors[e];
    }
    for (int i = 0; i < g.num_nodes(); ++i) {
        // 2 t_i from the definition: triangles at i found by scanning pairs
        long long t2 = 0;
        auto nbrs = g.neighbors(i);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                if (g.has_edge(nbrs[a], nbrs[b])) t2 += 2;
        CHECK(sum_t[i] == t2);
    }
}

TEST_CASE("clustering on K4 and the star") {
    LocalStats k4 = compute_local_stats(gen_complete(4));
    for (double c : k4.clustering_local) CHECK(c == doctest::Approx(1.0));
    CHECK(k4.clustering_all == doctest::Approx(1.0));
    CHECK(k4.clustering_deg2 == doctest::Approx(1.0));

    LocalStats s5 = compute_local_stats(star(5));
    for (double c : s5.clustering_local) CHECK(c == doctest::Approx(0.0));
    CHECK(s5.clustering_all == doctest::Approx(0.0));
}

TEST_CASE("alpha closed forms on complete graphs") {
    CHECK(alpha(gen_complete(3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (int n = 3; n <= 20; ++n)
        CHECK(alpha(gen_complete(n)) == doctest::Approx((n - 1.0) / n).epsilon(1e-12));
}

TEST_CASE("alpha exposes the unnormalized sum") {
    Graph g = gen_erdos_renyi(30, 0.2, 8);
    LocalStats s = compute_local_stats(g);
    CHECK(s.alpha_sum == doctest::Approx(s.alpha * g.num_nodes()).epsilon(1e-12));
    double direct = 0.0;
    for (int t : s.common_neighbors) direct += 2.0 / (t + 2);
    CHECK(s.alpha_sum == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("alpha lower bound: K3 by hand") {
    Graph k3 = gen_complete(3);
    // c = 1, sum 1/d = 3/2: bound = 1/(4 + (2/3)(3/2)) = 1/5
    CHECK(alpha_lower_bound(k3) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(alpha(k3) >= alpha_lower_bound(k3));
}

TEST_CASE("alpha lower bound: star with five leaves by hand") {
    Graph s5 = star(5);
    // c = 0, sum 1/d = 1/5 + 5: bound = 1/((2/6)(26/5)) = 15/26
    CHECK(alpha_lower_bound(s5) == doctest::Approx(15.0 / 26.0).epsilon(1e-12));
    CHECK(alpha(s5) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(alpha(s5) >= alpha_lower_bound(s5));
}

TEST_CASE("alpha lower bound rejects isolated nodes") {
    Graph g = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(alpha_lower_bound(g), std::invalid_argument);
}

TEST_CASE("lower bound inequality over random connected graphs") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 50 && seed < 500; ++seed) {
        Graph g = gen_erdos_renyi(40, 0.12, seed);
        if (!is_connected(g)) continue;
        ++tested;
        CHECK(alpha(g) >= alpha_lower_bound(g) - 1e-12);
    }
    CHECK(tested == 50);
}

TEST_CASE("both sides of the bound reported on the union construction") {
    for (auto [n, d] : {std::pair{20, 4}, {30, 3}, {50, 4}}) {
        Graph g = gen_remark_union(n, d, 77);
        double lhs = alpha(g);
        double rhs = alpha_lower_bound(g);
        CAPTURE(lhs);
        CAPTURE(rhs);
        CHECK(lhs >= rhs - 1e-12);
    }
}
