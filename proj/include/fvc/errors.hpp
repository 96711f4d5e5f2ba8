// Error types shared across the toolkit.  Validation failures (bad
// arguments, malformed input files) are kept distinct from runtime
// numerical failures so the CLI can map them to separate exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace fvc {

// Precondition or input-file violation.  CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Syntax error in an expression string; column is 1-based.
class ExprParseError : public ValidationError {
 public:
  ExprParseError(const std::string& msg, std::size_t column)
      : ValidationError(msg + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Domain error during expression evaluation (ln of a negative, division
// by zero, non-finite result), possibly tagged with the grid node index.
class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& msg) : std::runtime_error(msg), node_(-1) {}
  EvalError(const std::string& msg, long node)
      : std::runtime_error(msg + " (node " + std::to_string(node) + ")"), node_(node) {}
  long node() const { return node_; }

 private:
  long node_;
};

// Iterative solve stopped at max_iter without reaching the tolerance.
// CLI exit code 3.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(long iterations, double gradient_norm)
      : std::runtime_error("solver did not converge: " + std::to_string(iterations) +
                           " iterations, gradient sup-norm " + std::to_string(gradient_norm)),
        iterations_(iterations),
        gradient_norm_(gradient_norm) {}
  long iterations() const { return iterations_; }
  double gradient_norm() const { return gradient_norm_; }

 private:
  long iterations_;
  double gradient_norm_;
};

}  // namespace fvc
