#pragma once

#include <Eigen/Dense>

#include "cnsparse/graph.hpp"

namespace cnsparse {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// L = D - A. Dense by design: the toolkit certifies desk-scale graphs
/// where full eigenspectra are needed anyway.
Matrix laplacian(const Graph& g);
Matrix laplacian(const WeightedGraph& g);

/// x^T L x evaluated edge by edge: sum_(i,j) w_ij (x_i - x_j)^2.
double laplacian_quadratic_form(const Graph& g, const Vector& x);
double laplacian_quadratic_form(const WeightedGraph& g, const Vector& x);

}  // namespace cnsparse
