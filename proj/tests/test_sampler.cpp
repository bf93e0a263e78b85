#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cnsparse/generators.hpp"
#include "cnsparse/laplacian.hpp"
#include "cnsparse/local_stats.hpp"
#include "cnsparse/sampler.hpp"

using namespace cnsparse;

TEST_CASE("edge probabilities: symmetric cases") {
    for (double p : edge_probabilities(gen_complete(3)).probs)
        CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    for (double p : edge_probabilities(gen_path(3)).probs)
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("edge probabilities: triangle plus pendant edge") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    EdgeDistribution dist = edge_probabilities(g);
    for (std::size_t e = 0; e < dist.edges.size(); ++e) {
        bool pendant = dist.edges[e].v == 3;
        CHECK(dist.probs[e] == doctest::Approx(pendant ? 1.0 / 3.0 : 2.0 / 9.0).epsilon(1e-12));
    }
}

TEST_CASE("edge probabilities sum to one and stay positive") {
    Graph g = gen_erdos_renyi(40, 0.15, 5);
    EdgeDistribution dist = edge_probabilities(g);
    double total = std::accumulate(dist.probs.begin(), dist.probs.end(), 0.0);
    CHECK(std::abs(total - 1.0) < 1e-12);
    for (double p : dist.probs) CHECK(p > 0.0);
    CHECK_THROWS_AS(edge_probabilities(Graph::from_edges(3, {})), std::invalid_argument);
}

TEST_CASE("raising one common-neighbor count lowers that edge's probability") {
    Graph g = gen_erdos_renyi(30, 0.2, 13);
    auto counts = common_neighbor_counts(g);
    EdgeDistribution base = edge_probabilities(g, counts);
    for (std::size_t e = 0; e < counts.size(); e += 7) {
        auto bumped = counts;
        bumped[e] += 1;
        EdgeDistribution alt = edge_probabilities(g, bumped);
        CHECK(alt.probs[e] < base.probs[e]);
    }
}

TEST_CASE("sample count: K3 hand value and quadratic epsilon scaling") {
    Graph k3 = gen_complete(3);
    // alpha = 2/3: ceil(8*(2/3)*3*ln3/0.25) = ceil(70.31) = 71
    CHECK(sample_count(k3, 0.5) == 71);
    CHECK(sample_count_from_alpha(1.0, 100, 0.25) ==
          static_cast<long long>(std::ceil(8.0 * 100 * std::log(100.0) / 0.0625)));
    // pre-ceiling the budget scales exactly by 4 when epsilon halves
    double m1 = 8.0 * 1.4 * 34 * std::log(34.0) / 0.25;
    double m2 = 8.0 * 1.4 * 34 * std::log(34.0) / 0.0625;
    CHECK(m2 == doctest::Approx(4.0 * m1).epsilon(1e-12));
    CHECK_THROWS_AS(sample_count(k3, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(sample_count_from_alpha(1.0, 1, 0.5), std::invalid_argument);
}

TEST_CASE("config validation") {
    SampleConfig bad;
    bad.epsilon = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    SampleConfig good{0.5, std::nullopt, 7};
    CHECK_NOTHROW(good.validate());
}

TEST_CASE("sparsify: K3 with three draws conserves total weight") {
    Graph k3 = gen_complete(3);
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        SampleConfig cfg{0.5, 3, seed};
        WeightedGraph h = sparsify(k3, cfg);
        CHECK(h.total_weight() == doctest::Approx(3.0).epsilon(1e-12));
    }
}

TEST_CASE("sparsify accounting identity: each draw contributes one unit") {
    Graph g = gen_erdos_renyi(25, 0.25, 3);
    REQUIRE(is_connected(g));
    EdgeDistribution dist = edge_probabilities(g);
    long long m = 500;
    SampleConfig cfg{0.5, m, 4242};
    WeightedGraph h = sparsify(g, cfg);
    double units = 0.0;
    for (const auto& e : h.edges()) {
        auto idx = g.edge_index(e.u, e.v);
        REQUIRE(idx.has_value());
        units += e.w * static_cast<double>(m) * dist.probs[*idx];
    }
    CHECK(units == doctest::Approx(static_cast<double>(m)).epsilon(1e-9));
}

TEST_CASE("sparsified support is a subset of the input edges") {
    Graph g = gen_erdos_renyi(30, 0.2, 10);
    REQUIRE(is_connected(g));
    WeightedGraph h = sparsify(g, {0.8, std::nullopt, 17});
    for (const auto& e : h.edges()) CHECK(g.has_edge(e.u, e.v));
}

TEST_CASE("sparsify refuses disconnected graphs and is seed-deterministic") {
    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(sparsify(split, {0.5, 10, 1}), std::invalid_argument);

    Graph g = gen_erdos_renyi(20, 0.3, 6);
    REQUIRE(is_connected(g));
    WeightedGraph a = sparsify(g, {0.5, 200, 31});
    WeightedGraph b = sparsify(g, {0.5, 200, 31});
    REQUIRE(a.num_edges() == b.num_edges());
    for (int e = 0; e < a.num_edges(); ++e) {
        CHECK(a.edges()[e].u == b.edges()[e].u);
        CHECK(a.edges()[e].w == b.edges()[e].w);
    }
}

TEST_CASE("expected laplacian matches the input on K4 (Monte Carlo)") {
    Graph k4 = gen_complete(4);
    Matrix target = laplacian(k4);
    Matrix mean = Matrix::Zero(4, 4);
    const int runs = 200;
    for (int s = 0; s < runs; ++s)
        mean += laplacian(sparsify(k4, {0.5, 120, static_cast<std::uint64_t>(1000 + s)}));
    mean /= runs;
    CHECK((mean - target).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("percolation keeps everything at 1 and nothing at 0") {
    Graph g = gen_erdos_renyi(20, 0.3, 2);
    WeightedGraph all = percolate(g, 1.0, 5);
    CHECK(all.num_edges() == g.num_edges());
    for (const auto& e : all.edges()) CHECK(e.w == 1.0);
    CHECK(percolate(g, 0.0, 5).num_edges() == 0);
    CHECK_THROWS_AS(percolate(g, 1.5, 1), std::invalid_argument);
}

TEST_CASE("percolation edge count concentrates at the binomial mean") {
    Graph k20 = gen_complete(20);  // 190 edges
    double total = 0.0;
    const int runs = 500;
    for (int s = 0; s < runs; ++s) total += percolate(k20, 0.5, 9000 + s).num_edges();
    double mean = total / runs;
    double sigma_mean = std::sqrt(190 * 0.25) / std::sqrt(static_cast<double>(runs));
    CHECK(std::abs(mean - 95.0) <= 3.0 * sigma_mean);
}
