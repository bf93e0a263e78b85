#pragma once

#include "cnsparse/laplacian.hpp"

namespace cnsparse {

/// Extreme generalized eigenvalues of (L_H, L_G) restricted to the
/// complement of the all-ones direction, and the verdict for
/// (1-eps) L_G <= L_H <= (1+eps) L_G in the Loewner order.
struct SpectralReport {
    double eig_min = 0.0;
    double eig_max = 0.0;
    double distortion = 0.0;   // max(|eig_max - 1|, |1 - eig_min|)
    double epsilon = 0.0;
    bool pass = false;
};

class DisconnectedGraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Moore-Penrose pseudoinverse via symmetric eigendecomposition.
/// Eigenvalues below n * 1e-12 * lambda_max count as kernel; a kernel of
/// dimension > 1 means the underlying graph is disconnected.
Matrix pseudo_inverse(const Matrix& L);

/// M with M * L * M = I - (1/n) 1 1^T (the projector onto the complement
/// of the all-ones vector). Same kernel handling as pseudo_inverse.
Matrix pseudo_inverse_sqrt(const Matrix& L);

SpectralReport verify_spectral(const Matrix& laplacian_g, const Matrix& laplacian_h,
                               double epsilon);

double effective_resistance(const Graph& g, int i, int j);
double effective_resistance(const WeightedGraph& g, int i, int j);
/// Resistance queries against a precomputed pseudoinverse.
double effective_resistance(const Matrix& pinv, int i, int j);

/// Builds the two-endpoint/common-neighbor gadget with t shared neighbors
/// (nodes i, j plus t nodes adjacent to both, and the edge (i,j)) and
/// returns the effective resistance across (i,j). Equals 2/(t+2).
double local_subgraph_resistance(int t);

}  // namespace cnsparse
