#include "cnsparse/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cnsparse {

Hypergraph Hypergraph::from_hyperedges(int n, std::vector<std::vector<int>> hyperedges) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    Hypergraph h;
    h.n_ = n;
    h.membership_.assign(n, 0);
    for (auto& e : hyperedges) {
        if (e.size() < 2)
            throw std::invalid_argument("hyperedge must contain at least 2 nodes");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("repeated node in hyperedge");
        for (int v : e) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("hyperedge node " + std::to_string(v) +
                                            " out of range");
            h.membership_[v]++;
        }
    }
    h.hyperedges_ = std::move(hyperedges);
    return h;
}

int Hypergraph::membership(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("node id out of range");
    return membership_[v];
}

int Hypergraph::max_membership() const {
    int d = 0;
    for (int m : membership_) d = std::max(d, m);
    return d;
}

}  // namespace cnsparse
