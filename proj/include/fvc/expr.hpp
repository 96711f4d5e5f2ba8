// Scalar expression trees over a declared symbol list: parsing, pointwise
// evaluation, and symbolic differentiation.  Trees are immutable and share
// subtrees; all operations are safe for concurrent use.
//
// Grammar (canonical text form):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' ['-'] number)?
//   base   := number | identifier | function '(' expr ')' | '(' expr ')'
//   function := sin | cos | exp | ln | sqrt
// Exponents must be numeric literals.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fvc {

class Expression {
 public:
  enum class Kind { Constant, Variable, Unary, Binary };
  enum class UnaryOp { Neg, Sin, Cos, Exp, Ln, Sqrt };
  enum class BinaryOp { Add, Sub, Mul, Div, Pow };

  struct Node {
    Kind kind{};
    double value = 0.0;     // Constant
    std::string name;       // Variable
    int slot = -1;          // Variable: index into the declared symbol list
    UnaryOp uop{};
    BinaryOp bop{};
    std::shared_ptr<const Node> a, b;  // Unary uses a only
  };
  using NodePtr = std::shared_ptr<const Node>;

  Expression() = default;
  explicit Expression(NodePtr root) : root_(std::move(root)) {}
  const NodePtr& root() const { return root_; }
  bool valid() const { return root_ != nullptr; }

 private:
  NodePtr root_;
};

// Node factories with arithmetic constant folding.
Expression constant_expression(double v);
Expression variable_expression(const std::string& name, int slot);
Expression make_neg(const Expression& x);
Expression make_unary(Expression::UnaryOp op, const Expression& x);
Expression make_add(const Expression& a, const Expression& b);
Expression make_sub(const Expression& a, const Expression& b);
Expression make_mul(const Expression& a, const Expression& b);
Expression make_div(const Expression& a, const Expression& b);
Expression make_pow(const Expression& base, double exponent);

// Parses text over the declared symbols.  Throws ExprParseError (1-based
// column) on syntax errors, ValidationError on undeclared identifiers.
Expression parse_expression(const std::string& text, const std::vector<std::string>& symbols);

// Evaluation with values indexed by declaration slot.  Domain errors
// (ln/sqrt of a negative, division by zero, non-finite result) throw EvalError.
double evaluate(const Expression& e, std::span<const double> values);

// Evaluation from a name -> value map; missing bindings throw EvalError.
double evaluate(const Expression& e, const std::map<std::string, double>& env);

// Symbolic partial derivative with constant folding.
Expression differentiate(const Expression& e, const std::string& var);

// Canonical text form; parse(to_string(e)) prints identically.
std::string to_string(const Expression& e);

bool is_zero_constant(const Expression& e);
bool uses_symbol(const Expression& e, const std::string& name);

// Pretty-printed subexpression containing the symbol, for error messages.
std::optional<std::string> find_symbol_subexpression(const Expression& e, const std::string& name);

// Re-resolves variable slots against a different symbol list (names must exist).
Expression rebind(const Expression& e, const std::vector<std::string>& symbols);

// A Lagrangian L(t, q, v, w) where v stands for dq/dt and w for the left
// RL derivative of q; the three families of symbolic partials are cached.
struct Lagrangian {
  Expression expr;
  int dim = 1;
  std::vector<std::string> symbols;      // t, q1..qn, v1..vn, w1..wn
  std::vector<Expression> dq, dv, dw;    // partials, one per component
};

std::vector<std::string> lagrangian_symbols(int dim);
Lagrangian make_lagrangian(const std::string& text, int dim);

// Slot helpers for the (t, q, v, w) layout.
inline int slot_t() { return 0; }
inline int slot_q(int i, int) { return 1 + i; }
inline int slot_v(int i, int dim) { return 1 + dim + i; }
inline int slot_w(int i, int dim) { return 1 + 2 * dim + i; }

}  // namespace fvc
