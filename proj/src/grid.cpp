#include "fvc/grid.hpp"

#include <cmath>

#include "fvc/errors.hpp"

namespace fvc {

Grid build_grid(double a, double b, int n_nodes) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw ValidationError("grid endpoints must be finite");
  if (!(a < b)) throw ValidationError("grid requires a < b");
  if (n_nodes < 3) throw ValidationError("grid requires n_nodes >= 3");
  Grid g;
  g.a = a;
  g.b = b;
  g.n_nodes = n_nodes;
  g.h = (b - a) / (n_nodes - 1);
  g.nodes.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) g.nodes[i] = a + i * g.h;
  g.nodes.back() = b;
  return g;
}

GridFunction make_grid_function(const Grid& grid, int dim) {
  if (dim < 1) throw ValidationError("grid function dimension must be positive");
  GridFunction f;
  f.grid = grid;
  f.dim = dim;
  f.values = Eigen::MatrixXd::Zero(grid.n_nodes, dim);
  return f;
}

GridFunction sample(const Grid& grid, const std::function<double(double)>& f) {
  GridFunction out = make_grid_function(grid, 1);
  for (int i = 0; i < grid.n_nodes; ++i) out.values(i, 0) = f(grid.nodes[i]);
  return out;
}

Eigen::VectorXd trapezoid_weights(const Grid& grid) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(grid.n_nodes, grid.h);
  w(0) = grid.h / 2;
  w(grid.n_nodes - 1) = grid.h / 2;
  return w;
}

double trapezoid_integral(const GridFunction& f) {
  if (f.dim != 1) throw ValidationError("trapezoid_integral expects a scalar grid function");
  return trapezoid_weights(f.grid).dot(f.values.col(0));
}

void require_finite(const GridFunction& f, const char* what) {
  for (int i = 0; i < f.values.rows(); ++i)
    for (int j = 0; j < f.values.cols(); ++j)
      if (!std::isfinite(f.values(i, j)))
        throw EvalError(std::string(what) + ": non-finite value in component " +
                            std::to_string(j + 1),
                        i);
}

InteriorWindow interior_window(const Grid& grid, int margin_nodes) {
  InteriorWindow w;
  w.begin = margin_nodes;
  w.end = grid.n_nodes - 1 - margin_nodes;
  if (w.begin > w.end)
    throw ValidationError("grid too coarse for the interior window (need n_nodes >= " +
                          std::to_string(2 * margin_nodes + 1) + ")");
  return w;
}

}  // namespace fvc
