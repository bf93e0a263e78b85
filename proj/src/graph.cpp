#include "cnsparse/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cnsparse {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b)
            throw std::invalid_argument("self-loop at node " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) +
                                        "," + std::to_string(b) + ")");
        g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + ")");
    g.adj_.assign(n, {});
    std::vector<int> deg(n, 0);
    for (const Edge& e : g.edges_) {
        deg[e.u]++;
        deg[e.v]++;
    }
    for (int v = 0; v < n; ++v) g.adj_[v].reserve(deg[v]);
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int a, int b) const {
    check_node(a);
    check_node(b);
    if (a == b) return false;
    const auto& nbrs = adj_[degree(a) <= degree(b) ? a : b];
    int other = degree(a) <= degree(b) ? b : a;
    return std::binary_search(nbrs.begin(), nbrs.end(), other);
}

std::optional<int> Graph::edge_index(int a, int b) const {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

WeightedGraph WeightedGraph::from_edges(int n,
                                        const std::vector<std::tuple<int, int, double>>& triples) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    std::vector<WEdge> es;
    es.reserve(triples.size());
    for (auto [a, b, w] : triples) {
        if (a == b)
            throw std::invalid_argument("self-loop at node " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(w > 0.0))
            throw std::invalid_argument("edge weight must be positive");
        es.push_back(a < b ? WEdge{a, b, w} : WEdge{b, a, w});
    }
    std::sort(es.begin(), es.end(),
              [](const WEdge& x, const WEdge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
    WeightedGraph g;
    g.n_ = n;
    for (const WEdge& e : es) {
        if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v)
            g.edges_.back().w += e.w;  // accumulate repeats
        else
            g.edges_.push_back(e);
    }
    g.adj_.assign(n, {});
    for (const WEdge& e : g.edges_) {
        g.adj_[e.u].push_back({e.v, e.w});
        g.adj_[e.v].push_back({e.u, e.w});
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

double WeightedGraph::weighted_degree(int v) const {
    double s = 0.0;
    for (auto [u, w] : neighbors(v)) s += w;
    return s;
}

double WeightedGraph::total_weight() const {
    double s = 0.0;
    for (const WEdge& e : edges_) s += e.w;
    return s;
}

namespace {

template <class NeighborFn>
bool bfs_covers_all(int n, NeighborFn&& for_each_neighbor) {
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for_each_neighbor(u, [&](int v) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        });
    }
    return count == n;
}

}  // namespace

bool is_connected(const Graph& g) {
    return bfs_covers_all(g.num_nodes(), [&](int u, auto&& visit) {
        for (int v : g.neighbors(u)) visit(v);
    });
}

bool is_connected(const WeightedGraph& g) {
    return bfs_covers_all(g.num_nodes(), [&](int u, auto&& visit) {
        for (auto [v, w] : g.neighbors(u)) visit(v);
    });
}

}  // namespace cnsparse
