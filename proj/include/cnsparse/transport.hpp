#pragma once

#include <cstdint>
#include <vector>

namespace cnsparse {

/// Balanced transportation instance with integer supplies, demands, and
/// costs. sum(supply) must equal sum(demand); costs are nonnegative.
struct TransportProblem {
    std::vector<long long> supply;
    std::vector<long long> demand;
    std::vector<std::vector<long long>> cost;  // cost[i][j], supply i -> demand j
};

/// Exact minimum total cost of a feasible flow. All arithmetic is integer,
/// so the optimum is exact; solved by successive shortest augmenting paths
/// with node potentials.
long long min_cost_transport(const TransportProblem& problem);

/// Optimal flow matrix alongside the cost (used by tests and diagnostics).
struct TransportSolution {
    long long total_cost = 0;
    std::vector<std::vector<long long>> flow;
};
TransportSolution solve_transport(const TransportProblem& problem);

}  // namespace cnsparse
