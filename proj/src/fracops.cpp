#include "fvc/fracops.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "fvc/errors.hpp"

namespace fvc {

namespace {

// Product-trapezoid coefficient tables for order mu > 0.
//
// Row i of the left-integral matrix is
//   h^mu / Gamma(mu+2) * [ e(i), d(i-1), ..., d(1), 1 ]
// where d(k) is the second difference of k^(mu+1) and e(i) the endpoint
// coefficient; integrating the piecewise-linear interpolant exactly gives
// these in closed form.
struct TrapTables {
  std::vector<double> d;  // d[k], k >= 1
  std::vector<double> e;  // e[i], i >= 1
  double scale;
};

TrapTables trap_tables(int n, double h, double mu) {
  TrapTables t;
  t.scale = std::pow(h, mu) / std::tgamma(mu + 2.0);
  t.d.assign(n, 0.0);
  t.e.assign(n, 0.0);
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    t.d[k] = std::pow(kk + 1, mu + 1) - 2 * std::pow(kk, mu + 1) + std::pow(kk - 1, mu + 1);
    t.e[k] = std::pow(kk - 1, mu + 1) - (kk - mu - 1) * std::pow(kk, mu);
  }
  return t;
}

void check_order_positive(double order) {
  if (!(order > 0.0) || !std::isfinite(order))
    throw ValidationError("fractional integral order must be positive");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0))
    throw ValidationError("derivative order alpha must lie in (0, 1]");
}

Eigen::MatrixXd classical_matrix(const Grid& g) {
  const int n = g.n_nodes;
  const double h = g.h;
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  D(0, 0) = -3 / (2 * h);
  D(0, 1) = 4 / (2 * h);
  D(0, 2) = -1 / (2 * h);
  for (int i = 1; i < n - 1; ++i) {
    D(i, i - 1) = -1 / (2 * h);
    D(i, i + 1) = 1 / (2 * h);
  }
  D(n - 1, n - 1) = 3 / (2 * h);
  D(n - 1, n - 2) = -4 / (2 * h);
  D(n - 1, n - 3) = 1 / (2 * h);
  return D;
}

}  // namespace

FracOperator left_fractional_integral(const Grid& grid, double order) {
  check_order_positive(order);
  const int n = grid.n_nodes;
  const TrapTables t = trap_tables(n, grid.h, order);
  FracOperator op{OpKind::LeftIntegral, order, grid, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 1; i < n; ++i) {
    op.weights(i, 0) = t.scale * t.e[i];
    for (int j = 1; j < i; ++j) op.weights(i, j) = t.scale * t.d[i - j];
    op.weights(i, i) = t.scale;
  }
  return op;
}

FracOperator right_fractional_integral(const Grid& grid, double order) {
  check_order_positive(order);
  const int n = grid.n_nodes;
  const int m = n - 1;
  const TrapTables t = trap_tables(n, grid.h, order);
  FracOperator op{OpKind::RightIntegral, order, grid, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < m; ++i) {
    op.weights(i, m) = t.scale * t.e[m - i];
    for (int j = i + 1; j < m; ++j) op.weights(i, j) = t.scale * t.d[j - i];
    op.weights(i, i) = t.scale;
  }
  return op;
}

Eigen::SparseMatrix<double> central_difference(const Grid& g) {
  const int n = g.n_nodes;
  const double h = g.h;
  Eigen::SparseMatrix<double> D(n, n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(2 * n + 2);
  trip.emplace_back(0, 0, -3 / (2 * h));
  trip.emplace_back(0, 1, 4 / (2 * h));
  trip.emplace_back(0, 2, -1 / (2 * h));
  for (int i = 1; i < n - 1; ++i) {
    trip.emplace_back(i, i - 1, -1 / (2 * h));
    trip.emplace_back(i, i + 1, 1 / (2 * h));
  }
  trip.emplace_back(n - 1, n - 1, 3 / (2 * h));
  trip.emplace_back(n - 1, n - 2, -4 / (2 * h));
  trip.emplace_back(n - 1, n - 3, 1 / (2 * h));
  D.setFromTriplets(trip.begin(), trip.end());
  return D;
}

Eigen::SparseMatrix<double> backward_difference(const Grid& g) {
  const int n = g.n_nodes;
  const double h = g.h;
  Eigen::SparseMatrix<double> B(n, n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(3 * n);
  // Row 0 stays zero: there is no one-sided estimate from the left there,
  // and the composed RL derivative is singular at t = a anyway.
  trip.emplace_back(1, 0, -1 / h);
  trip.emplace_back(1, 1, 1 / h);
  for (int i = 2; i < n; ++i) {
    trip.emplace_back(i, i, 3 / (2 * h));
    trip.emplace_back(i, i - 1, -4 / (2 * h));
    trip.emplace_back(i, i - 2, 1 / (2 * h));
  }
  B.setFromTriplets(trip.begin(), trip.end());
  return B;
}

Eigen::SparseMatrix<double> forward_difference(const Grid& g) {
  const int n = g.n_nodes;
  const double h = g.h;
  Eigen::SparseMatrix<double> F(n, n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(3 * n);
  for (int i = 0; i < n - 2; ++i) {
    trip.emplace_back(i, i, -3 / (2 * h));
    trip.emplace_back(i, i + 1, 4 / (2 * h));
    trip.emplace_back(i, i + 2, -1 / (2 * h));
  }
  trip.emplace_back(n - 2, n - 2, -1 / h);
  trip.emplace_back(n - 2, n - 1, 1 / h);
  F.setFromTriplets(trip.begin(), trip.end());
  return F;
}

Eigen::SparseMatrix<double> transcription_derivative(const Grid& g) {
  const int n = g.n_nodes;
  const double h = g.h;
  Eigen::SparseMatrix<double> D(n, n);
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(2 * n);
  trip.emplace_back(0, 0, -1 / h);
  trip.emplace_back(0, 1, 1 / h);
  for (int i = 1; i < n - 1; ++i) {
    trip.emplace_back(i, i - 1, -1 / (2 * h));
    trip.emplace_back(i, i + 1, 1 / (2 * h));
  }
  trip.emplace_back(n - 1, n - 2, -1 / h);
  trip.emplace_back(n - 1, n - 1, 1 / h);
  D.setFromTriplets(trip.begin(), trip.end());
  return D;
}

FracOperator left_rl_derivative(const Grid& grid, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) return classical_derivative(grid);
  FracOperator integral = left_fractional_integral(grid, 1.0 - alpha);
  FracOperator op{OpKind::LeftDerivative, alpha, grid,
                  backward_difference(grid) * integral.weights};
  return op;
}

FracOperator right_rl_derivative(const Grid& grid, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) {
    FracOperator op = classical_derivative(grid);
    op.weights = -op.weights;
    return op;
  }
  FracOperator integral = right_fractional_integral(grid, 1.0 - alpha);
  FracOperator op{OpKind::RightDerivative, alpha, grid,
                  -(forward_difference(grid) * integral.weights)};
  return op;
}

FracOperator classical_derivative(const Grid& grid) {
  return FracOperator{OpKind::ClassicalDerivative, 1.0, grid, classical_matrix(grid)};
}

GridFunction apply(const FracOperator& op, const GridFunction& f) {
  if (!op.grid.same_as(f.grid))
    throw ValidationError("operator and grid function live on different grids");
  GridFunction out;
  out.grid = f.grid;
  out.dim = f.dim;
  out.values = op.weights * f.values;
  require_finite(out, "operator application");
  return out;
}

GridFunction nth_time_derivative(const GridFunction& f, int r, int r_max) {
  if (r < 0) throw ValidationError("derivative count r must be >= 0");
  if (r > r_max)
    throw ValidationError("truncation order too high: r = " + std::to_string(r) +
                          " exceeds r_max = " + std::to_string(r_max));
  const int n = f.grid.n_nodes;
  if (n - 1 < 2 * r + 2)
    throw ValidationError("grid too coarse for " + std::to_string(r) +
                          " repeated derivatives (need n_nodes - 1 >= " +
                          std::to_string(2 * r + 2) + ")");
  if (r == 0) return f;
  const double h = f.grid.h;
  GridFunction cur = f;
  GridFunction next = make_grid_function(f.grid, f.dim);
  for (int pass = 0; pass < r; ++pass) {
    for (int c = 0; c < f.dim; ++c) {
      const auto x = cur.values.col(c);
      auto y = next.values.col(c);
      y(0) = (-3 * x(0) + 4 * x(1) - x(2)) / (2 * h);
      for (int i = 1; i < n - 1; ++i) y(i) = (x(i + 1) - x(i - 1)) / (2 * h);
      y(n - 1) = (3 * x(n - 1) - 4 * x(n - 2) + x(n - 3)) / (2 * h);
    }
    std::swap(cur, next);
  }
  require_finite(cur, "nth_time_derivative");
  return cur;
}

double ibp_residual(const GridFunction& f, const GridFunction& g, double alpha) {
  if (f.dim != 1 || g.dim != 1)
    throw ValidationError("ibp_residual expects scalar grid functions");
  if (!f.grid.same_as(g.grid)) throw ValidationError("ibp_residual: grid mismatch");
  check_alpha(alpha);
  const int n = f.grid.n_nodes;
  if (alpha == 1.0) {
    const double tol = 1e-12;
    const bool f_ok = std::abs(f.values(0, 0)) <= tol && std::abs(f.values(n - 1, 0)) <= tol;
    const bool g_ok = std::abs(g.values(0, 0)) <= tol && std::abs(g.values(n - 1, 0)) <= tol;
    if (!f_ok && !g_ok)
      throw ValidationError(
          "ibp_residual with alpha = 1 requires f or g to vanish at both endpoints");
  }
  const Eigen::VectorXd w = trapezoid_weights(f.grid);
  Eigen::VectorXd dg, df;
  {
    FracOperator left = left_rl_derivative(f.grid, alpha);
    dg = left.weights * g.values.col(0);
  }
  {
    FracOperator right = right_rl_derivative(f.grid, alpha);
    df = right.weights * f.values.col(0);
  }
  const double lhs = w.dot(f.values.col(0).cwiseProduct(dg));
  const double rhs = w.dot(g.values.col(0).cwiseProduct(df));
  return std::abs(lhs - rhs);
}

void dump_weights_csv(const FracOperator& op, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw ValidationError("cannot open " + path + " for writing");
  const int n = op.grid.n_nodes;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      std::fprintf(fp, "%.16e%s", op.weights(i, j), j + 1 < n ? "," : "\n");
  }
  std::fclose(fp);
}

}  // namespace fvc
