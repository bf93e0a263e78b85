#include "cnsparse/laplacian.hpp"

namespace cnsparse {

Matrix laplacian(const Graph& g) {
    int n = g.num_nodes();
    Matrix L = Matrix::Zero(n, n);
    for (const Edge& e : g.edges()) {
        L(e.u, e.u) += 1.0;
        L(e.v, e.v) += 1.0;
        L(e.u, e.v) -= 1.0;
        L(e.v, e.u) -= 1.0;
    }
    return L;
}

Matrix laplacian(const WeightedGraph& g) {
    int n = g.num_nodes();
    Matrix L = Matrix::Zero(n, n);
    for (const auto& e : g.edges()) {
        L(e.u, e.u) += e.w;
        L(e.v, e.v) += e.w;
        L(e.u, e.v) -= e.w;
        L(e.v, e.u) -= e.w;
    }
    return L;
}

double laplacian_quadratic_form(const Graph& g, const Vector& x) {
    double s = 0.0;
    for (const Edge& e : g.edges()) {
        double d = x[e.u] - x[e.v];
        s += d * d;
    }
    return s;
}

double laplacian_quadratic_form(const WeightedGraph& g, const Vector& x) {
    double s = 0.0;
    for (const auto& e : g.edges()) {
        double d = x[e.u] - x[e.v];
        s += e.w * d * d;
    }
    return s;
}

}  // namespace cnsparse
