// Dense matrix realizations of Riemann-Liouville fractional integrals and
// derivatives on uniform grids, the classical differentiation matrix, and
// the discrete integration-by-parts residual.
//
// Integrals use product-trapezoid weights for the weakly singular kernel
// (exact on piecewise-linear data, any positive order).  Derivatives of
// order alpha in (0,1) are the literal composition of a one-sided
// second-order difference matrix with the order-(1-alpha) integral; at
// alpha = 1 they degrade to the classical matrix, which keeps left/right
// operators triangular for every fractional order.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <string>

#include "fvc/grid.hpp"

namespace fvc {

enum class OpKind {
  LeftIntegral,
  RightIntegral,
  LeftDerivative,
  RightDerivative,
  ClassicalDerivative,
};

struct FracOperator {
  OpKind kind{};
  double order = 0.0;
  Grid grid;
  Eigen::MatrixXd weights;  // n_nodes x n_nodes
};

// Order may be any positive real (the conservation-law series needs r+1-alpha).
FracOperator left_fractional_integral(const Grid& grid, double order);
FracOperator right_fractional_integral(const Grid& grid, double order);

// alpha in (0,1]; alpha = 1 returns the classical matrix (right: its negative).
FracOperator left_rl_derivative(const Grid& grid, double alpha);
FracOperator right_rl_derivative(const Grid& grid, double alpha);

// Central differences in the interior, second-order one-sided at the endpoints.
FracOperator classical_derivative(const Grid& grid);

GridFunction apply(const FracOperator& op, const GridFunction& f);

// Sparse difference matrices (building blocks; also used by the solver).
// central: second-order one-sided endpoint rows.
// backward/forward: one-sided second-order where enough nodes exist, first
// order next to the boundary, zero row at the boundary itself; these keep
// the derivative compositions triangular.
// transcription: central interior with *first-order* one-sided endpoint
// rows; with trapezoid weights this is the summation-by-parts pair
// D^T W = diag(-1,0,...,0,1) - W D, i.e. the exact discrete adjoint.
Eigen::SparseMatrix<double> central_difference(const Grid& grid);
Eigen::SparseMatrix<double> backward_difference(const Grid& grid);
Eigen::SparseMatrix<double> forward_difference(const Grid& grid);
Eigen::SparseMatrix<double> transcription_derivative(const Grid& grid);

// r-fold application of the classical differentiation matrix (stencil form).
// r = 0 returns f.  Noise grows like eps/h^r; r is capped at r_max.
GridFunction nth_time_derivative(const GridFunction& f, int r, int r_max = 5);

inline constexpr int kDefaultMaxDerivativeOrder = 5;

// | int f (D_a^alpha g) - int g (D_b^alpha f) | with trapezoid quadrature.
// For alpha = 1 one of f, g must vanish at both endpoints (tol 1e-12).
double ibp_residual(const GridFunction& f, const GridFunction& g, double alpha);

// Debug export of the weight matrix (row-major CSV, full precision).
void dump_weights_csv(const FracOperator& op, const std::string& path);

}  // namespace fvc
