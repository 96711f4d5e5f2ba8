// Uniform grids on [a,b] and vector-valued functions sampled on them.
// Everything downstream (operators, solvers, drift reports) shares these
// two types; both are immutable after construction.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace fvc {

struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_nodes = 0;
  double h = 0.0;
  std::vector<double> nodes;

  // Grids are interchangeable iff they describe the same partition.
  bool same_as(const Grid& other) const {
    return a == other.a && b == other.b && n_nodes == other.n_nodes;
  }
};

// Uniform partition with n_nodes >= 3 points, nodes[i] = a + i*h.
Grid build_grid(double a, double b, int n_nodes);

struct GridFunction {
  Grid grid;
  int dim = 1;
  Eigen::MatrixXd values;  // n_nodes x dim
};

GridFunction make_grid_function(const Grid& grid, int dim);

// Samples a scalar callable at the grid nodes.
GridFunction sample(const Grid& grid, const std::function<double(double)>& f);

// Trapezoid quadrature weights (h/2, h, ..., h, h/2) as a vector.
Eigen::VectorXd trapezoid_weights(const Grid& grid);

// Trapezoid integral of a scalar grid function.
double trapezoid_integral(const GridFunction& f);

// Throws EvalError naming the first offending node if any entry is NaN/Inf.
void require_finite(const GridFunction& f, const char* what);

// Node indices [margin, n-1-margin] of the interior window [a+margin*h, b-margin*h].
struct InteriorWindow {
  int begin = 0;  // inclusive
  int end = 0;    // inclusive
};
InteriorWindow interior_window(const Grid& grid, int margin_nodes = 10);

}  // namespace fvc
