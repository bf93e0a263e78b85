#include "cnsparse/spectral.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace cnsparse {

namespace {

struct EigDecomp {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    double kernel_tol;
    int kernel_dim;
};

EigDecomp symmetric_eig_with_kernel(const Matrix& L) {
    if (L.rows() != L.cols()) throw std::invalid_argument("matrix must be square");
    Matrix sym = 0.5 * (L + L.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    EigDecomp d;
    d.values = es.eigenvalues();
    d.vectors = es.eigenvectors();
    double lambda_max = d.values.size() ? d.values.maxCoeff() : 0.0;
    d.kernel_tol = static_cast<double>(L.rows()) * 1e-12 * lambda_max;
    d.kernel_dim = 0;
    for (int k = 0; k < d.values.size(); ++k)
        if (d.values[k] <= d.kernel_tol) ++d.kernel_dim;
    return d;
}

Matrix pinv_power(const Matrix& L, double exponent) {
    EigDecomp d = symmetric_eig_with_kernel(L);
    if (d.kernel_dim > 1)
        throw DisconnectedGraphError("Laplacian kernel has dimension " +
                                     std::to_string(d.kernel_dim) +
                                     "; the graph is disconnected");
    Eigen::VectorXd scaled = Eigen::VectorXd::Zero(d.values.size());
    for (int k = 0; k < d.values.size(); ++k)
        if (d.values[k] > d.kernel_tol) scaled[k] = std::pow(d.values[k], exponent);
    return d.vectors * scaled.asDiagonal() * d.vectors.transpose();
}

}  // namespace

Matrix pseudo_inverse(const Matrix& L) { return pinv_power(L, -1.0); }

Matrix pseudo_inverse_sqrt(const Matrix& L) { return pinv_power(L, -0.5); }

SpectralReport verify_spectral(const Matrix& laplacian_g, const Matrix& laplacian_h,
                               double epsilon) {
    if (laplacian_g.rows() != laplacian_h.rows() || laplacian_g.cols() != laplacian_h.cols())
        throw std::invalid_argument("Laplacian dimensions do not match");
    const auto n = laplacian_g.rows();
    if (n == 0) throw std::invalid_argument("empty Laplacian");

    Matrix m = pseudo_inverse_sqrt(laplacian_g);
    Matrix y = m * laplacian_h * m;
    // Deflate the all-ones direction to -1 so the artifact eigenvalue sits
    // far from the restricted spectrum (which is >= 0 up to roundoff).
    Matrix deflated = 0.5 * (y + y.transpose());
    deflated.array() -= 1.0 / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Matrix> es(deflated);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    Eigen::VectorXd vals = es.eigenvalues();

    int drop = 0;
    for (int k = 1; k < vals.size(); ++k)
        if (std::abs(vals[k] + 1.0) < std::abs(vals[drop] + 1.0)) drop = k;

    SpectralReport report;
    report.epsilon = epsilon;
    if (vals.size() == 1) {
        // Single node: the restriction is empty, any scaling passes.
        report.eig_min = report.eig_max = 1.0;
    } else {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < vals.size(); ++k) {
            if (k == drop) continue;
            lo = std::min(lo, vals[k]);
            hi = std::max(hi, vals[k]);
        }
        report.eig_min = lo;
        report.eig_max = hi;
    }
    report.distortion = std::max(std::abs(report.eig_max - 1.0), std::abs(1.0 - report.eig_min));
    report.pass = (1.0 - epsilon <= report.eig_min) && (report.eig_max <= 1.0 + epsilon);
    return report;
}

double effective_resistance(const Matrix& pinv, int i, int j) {
    if (i < 0 || j < 0 || i >= pinv.rows() || j >= pinv.rows())
        throw std::out_of_range("node id out of range");
    if (i == j) return 0.0;
    return pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);
}

double effective_resistance(const Graph& g, int i, int j) {
    return effective_resistance(pseudo_inverse(laplacian(g)), i, j);
}

double effective_resistance(const WeightedGraph& g, int i, int j) {
    return effective_resistance(pseudo_inverse(laplacian(g)), i, j);
}

double local_subgraph_resistance(int t) {
    if (t < 0) throw std::invalid_argument("common-neighbor count must be >= 0");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int k = 0; k < t; ++k) {
        edges.push_back({0, 2 + k});
        edges.push_back({1, 2 + k});
    }
    Graph gadget = Graph::from_edges(t + 2, edges);
    return effective_resistance(gadget, 0, 1);
}

}  // namespace cnsparse
