#include "cnsparse/transport.hpp"

#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cnsparse {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Min-cost max-flow on a small dense network, SPFA-based successive
// shortest paths. Node layout: 0 = source, 1..s = supplies,
// s+1..s+t = demands, s+t+1 = sink.
struct Network {
    struct Arc {
        int to;
        long long cap;
        long long cost;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit Network(int n) : arcs(n) {}

    void add(int from, int to, long long cap, long long cost) {
        arcs[from].push_back({to, cap, cost, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, -cost, static_cast<int>(arcs[from].size()) - 1});
    }

    long long run(int source, int sink, long long flow_target) {
        long long total_cost = 0;
        long long flow = 0;
        const int n = static_cast<int>(arcs.size());
        while (flow < flow_target) {
            std::vector<long long> dist(n, kInf);
            std::vector<int> prev_node(n, -1), prev_arc(n, -1);
            std::vector<char> in_queue(n, 0);
            std::deque<int> queue{source};
            dist[source] = 0;
            in_queue[source] = 1;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                in_queue[u] = 0;
                for (int a = 0; a < static_cast<int>(arcs[u].size()); ++a) {
                    const Arc& arc = arcs[u][a];
                    if (arc.cap <= 0 || dist[u] + arc.cost >= dist[arc.to]) continue;
                    dist[arc.to] = dist[u] + arc.cost;
                    prev_node[arc.to] = u;
                    prev_arc[arc.to] = a;
                    if (!in_queue[arc.to]) {
                        in_queue[arc.to] = 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (dist[sink] >= kInf)
                throw std::invalid_argument("transportation instance is infeasible");
            long long push = flow_target - flow;
            for (int v = sink; v != source; v = prev_node[v])
                push = std::min(push, arcs[prev_node[v]][prev_arc[v]].cap);
            for (int v = sink; v != source; v = prev_node[v]) {
                Arc& fwd = arcs[prev_node[v]][prev_arc[v]];
                fwd.cap -= push;
                arcs[v][fwd.rev].cap += push;
            }
            flow += push;
            total_cost += push * dist[sink];
        }
        return total_cost;
    }
};

}  // namespace

TransportSolution solve_transport(const TransportProblem& problem) {
    const int s = static_cast<int>(problem.supply.size());
    const int t = static_cast<int>(problem.demand.size());
    if (s == 0 || t == 0) throw std::invalid_argument("empty transportation instance");
    long long total_supply = std::accumulate(problem.supply.begin(), problem.supply.end(), 0LL);
    long long total_demand = std::accumulate(problem.demand.begin(), problem.demand.end(), 0LL);
    if (total_supply != total_demand)
        throw std::invalid_argument("supplies and demands must balance");
    if (static_cast<int>(problem.cost.size()) != s)
        throw std::invalid_argument("cost matrix has wrong row count");
    for (const auto& row : problem.cost) {
        if (static_cast<int>(row.size()) != t)
            throw std::invalid_argument("cost matrix has wrong column count");
        for (long long c : row)
            if (c < 0) throw std::invalid_argument("costs must be nonnegative");
    }

    Network net(s + t + 2);
    const int source = 0, sink = s + t + 1;
    for (int i = 0; i < s; ++i) net.add(source, 1 + i, problem.supply[i], 0);
    for (int j = 0; j < t; ++j) net.add(s + 1 + j, sink, problem.demand[j], 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) net.add(1 + i, s + 1 + j, total_supply, problem.cost[i][j]);

    TransportSolution sol;
    sol.total_cost = net.run(source, sink, total_supply);
    sol.flow.assign(s, std::vector<long long>(t, 0));
    for (int i = 0; i < s; ++i) {
        for (const auto& arc : net.arcs[1 + i]) {
            if (arc.to >= s + 1 && arc.to <= s + t) {
                // residual bookkeeping: shipped = original cap - remaining
                sol.flow[i][arc.to - s - 1] = total_supply - arc.cap;
            }
        }
    }
    return sol;
}

long long min_cost_transport(const TransportProblem& problem) {
    return solve_transport(problem).total_cost;
}

}  // namespace cnsparse
