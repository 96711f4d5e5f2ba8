#include "fvc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "fvc/errors.hpp"

namespace fvc {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Kind = Expression::Kind;
using UnaryOp = Expression::UnaryOp;
using BinaryOp = Expression::BinaryOp;

namespace {

bool is_const(const NodePtr& n, double v) {
  return n->kind == Kind::Constant && n->value == v;
}

bool is_const(const NodePtr& n) { return n->kind == Kind::Constant; }

NodePtr const_node(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = v;
  return n;
}

NodePtr binary_node(BinaryOp op, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->bop = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr unary_node(UnaryOp op, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unary;
  n->uop = op;
  n->a = std::move(a);
  return n;
}

}  // namespace

Expression constant_expression(double v) { return Expression(const_node(v)); }

Expression variable_expression(const std::string& name, int slot) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = name;
  n->slot = slot;
  return Expression(n);
}

Expression make_neg(const Expression& x) {
  const NodePtr& n = x.root();
  if (is_const(n)) return constant_expression(-n->value);
  if (n->kind == Kind::Unary && n->uop == UnaryOp::Neg) return Expression(n->a);
  return Expression(unary_node(UnaryOp::Neg, n));
}

Expression make_unary(Expression::UnaryOp op, const Expression& x) {
  if (op == UnaryOp::Neg) return make_neg(x);
  return Expression(unary_node(op, x.root()));
}

Expression make_add(const Expression& a, const Expression& b) {
  if (is_const(a.root(), 0.0)) return b;
  if (is_const(b.root(), 0.0)) return a;
  if (is_const(a.root()) && is_const(b.root()))
    return constant_expression(a.root()->value + b.root()->value);
  return Expression(binary_node(BinaryOp::Add, a.root(), b.root()));
}

Expression make_sub(const Expression& a, const Expression& b) {
  if (is_const(b.root(), 0.0)) return a;
  if (is_const(a.root()) && is_const(b.root()))
    return constant_expression(a.root()->value - b.root()->value);
  if (is_const(a.root(), 0.0)) return make_neg(b);
  return Expression(binary_node(BinaryOp::Sub, a.root(), b.root()));
}

Expression make_mul(const Expression& a, const Expression& b) {
  if (is_const(a.root(), 0.0) || is_const(b.root(), 0.0)) return constant_expression(0.0);
  if (is_const(a.root(), 1.0)) return b;
  if (is_const(b.root(), 1.0)) return a;
  if (is_const(a.root()) && is_const(b.root()))
    return constant_expression(a.root()->value * b.root()->value);
  // collect nested constant coefficients: c1*(c2*x) -> (c1*c2)*x
  if (is_const(a.root()) && b.root()->kind == Kind::Binary &&
      b.root()->bop == BinaryOp::Mul && is_const(b.root()->a))
    return make_mul(constant_expression(a.root()->value * b.root()->a->value),
                    Expression(b.root()->b));
  if (is_const(b.root())) return make_mul(b, a);
  return Expression(binary_node(BinaryOp::Mul, a.root(), b.root()));
}

Expression make_div(const Expression& a, const Expression& b) {
  if (is_const(b.root(), 1.0)) return a;
  if (is_const(a.root()) && is_const(b.root()) && b.root()->value != 0.0)
    return constant_expression(a.root()->value / b.root()->value);
  return Expression(binary_node(BinaryOp::Div, a.root(), b.root()));
}

Expression make_pow(const Expression& base, double exponent) {
  if (exponent == 0.0) return constant_expression(1.0);
  if (exponent == 1.0) return base;
  if (is_const(base.root()))
    return constant_expression(std::pow(base.root()->value, exponent));
  return Expression(binary_node(BinaryOp::Pow, base.root(), const_node(exponent)));
}

// ---------------------------------------------------------------------------
// Parser: hand-rolled tokenizer + recursive descent with 1-based columns.

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& symbols;
  std::size_t pos = 0;  // 0-based offset

  std::size_t column() const { return pos + 1; }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  double number() {
    skip_ws();
    const std::size_t start = pos;
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || std::isspace(static_cast<unsigned char>(*begin)))
      throw ExprParseError("expected a number", column());
    // reject strtod-accepted forms that start with a sign; signs are grammar-level
    if (*begin == '+' || *begin == '-')
      throw ExprParseError("expected a number", column());
    pos = start + static_cast<std::size_t>(end - begin);
    return v;
  }

  std::string identifier() {
    skip_ws();
    std::size_t s = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(s, pos - s);
  }

  int lookup_symbol(const std::string& name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == name) return static_cast<int>(i);
    return -1;
  }

  Expression parse_expr() {
    Expression e = parse_term();
    while (true) {
      if (eat('+'))
        e = make_add(e, parse_term());
      else if (eat('-'))
        e = make_sub(e, parse_term());
      else
        return e;
    }
  }

  Expression parse_term() {
    Expression e = parse_factor();
    while (true) {
      if (eat('*'))
        e = make_mul(e, parse_factor());
      else if (eat('/'))
        e = make_div(e, parse_factor());
      else
        return e;
    }
  }

  Expression parse_factor() {
    if (eat('-')) return make_neg(parse_factor());
    Expression e = parse_base();
    if (eat('^')) {
      double sign = 1.0;
      if (eat('-')) sign = -1.0;
      const double expo = number();
      e = make_pow(e, sign * expo);
    }
    return e;
  }

  Expression parse_base() {
    skip_ws();
    if (pos >= text.size()) throw ExprParseError("unexpected end of expression", column());
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Expression e = parse_expr();
      if (!eat(')')) throw ExprParseError("expected ')'", column());
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return constant_expression(number());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t id_col = column();
      const std::string name = identifier();
      if (peek() == '(') {
        UnaryOp op;
        if (name == "sin")
          op = UnaryOp::Sin;
        else if (name == "cos")
          op = UnaryOp::Cos;
        else if (name == "exp")
          op = UnaryOp::Exp;
        else if (name == "ln")
          op = UnaryOp::Ln;
        else if (name == "sqrt")
          op = UnaryOp::Sqrt;
        else
          throw ExprParseError("unknown function '" + name + "'", id_col);
        eat('(');
        Expression arg = parse_expr();
        if (!eat(')')) throw ExprParseError("expected ')'", column());
        return make_unary(op, arg);
      }
      const int slot = lookup_symbol(name);
      if (slot < 0) throw ValidationError("undeclared identifier '" + name + "'");
      return variable_expression(name, slot);
    }
    throw ExprParseError(std::string("unexpected character '") + c + "'", column());
  }
};

}  // namespace

Expression parse_expression(const std::string& text, const std::vector<std::string>& symbols) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw ValidationError("empty expression");
  Parser p{text, symbols};
  Expression e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ExprParseError("trailing input after expression", p.column());
  return e;
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw EvalError(std::string("non-finite result in ") + what);
  return v;
}

double eval_pow(double x, double e) {
  const double r = std::round(e);
  if (r == e && std::abs(e) <= 32) {
    long k = static_cast<long>(r);
    const bool inv = k < 0;
    if (inv) {
      if (x == 0.0) throw EvalError("zero raised to a negative power");
      k = -k;
    }
    double acc = 1.0;
    for (long i = 0; i < k; ++i) acc *= x;
    return checked(inv ? 1.0 / acc : acc, "power");
  }
  if (x < 0.0) throw EvalError("negative base with non-integer exponent");
  if (x == 0.0 && e < 0.0) throw EvalError("zero raised to a negative power");
  return checked(std::pow(x, e), "power");
}

template <typename Lookup>
double eval_node(const NodePtr& n, const Lookup& lookup) {
  switch (n->kind) {
    case Kind::Constant:
      return n->value;
    case Kind::Variable:
      return lookup(*n);
    case Kind::Unary: {
      const double x = eval_node(n->a, lookup);
      switch (n->uop) {
        case UnaryOp::Neg:
          return -x;
        case UnaryOp::Sin:
          return std::sin(x);
        case UnaryOp::Cos:
          return std::cos(x);
        case UnaryOp::Exp:
          return checked(std::exp(x), "exp");
        case UnaryOp::Ln:
          if (x <= 0.0) throw EvalError("ln of a non-positive value");
          return std::log(x);
        case UnaryOp::Sqrt:
          if (x < 0.0) throw EvalError("sqrt of a negative value");
          return std::sqrt(x);
      }
      break;
    }
    case Kind::Binary: {
      const double a = eval_node(n->a, lookup);
      if (n->bop == BinaryOp::Pow) return eval_pow(a, n->b->value);
      const double b = eval_node(n->b, lookup);
      switch (n->bop) {
        case BinaryOp::Add:
          return checked(a + b, "addition");
        case BinaryOp::Sub:
          return checked(a - b, "subtraction");
        case BinaryOp::Mul:
          return checked(a * b, "multiplication");
        case BinaryOp::Div:
          if (b == 0.0) throw EvalError("division by zero");
          return checked(a / b, "division");
        case BinaryOp::Pow:
          break;
      }
      break;
    }
  }
  throw EvalError("malformed expression tree");
}

}  // namespace

double evaluate(const Expression& e, std::span<const double> values) {
  if (!e.valid()) throw EvalError("empty expression");
  return eval_node(e.root(), [&](const Node& n) -> double {
    if (n.slot < 0 || n.slot >= static_cast<int>(values.size()))
      throw EvalError("missing binding for '" + n.name + "'");
    return values[static_cast<std::size_t>(n.slot)];
  });
}

double evaluate(const Expression& e, const std::map<std::string, double>& env) {
  if (!e.valid()) throw EvalError("empty expression");
  return eval_node(e.root(), [&](const Node& n) -> double {
    auto it = env.find(n.name);
    if (it == env.end()) throw EvalError("missing binding for '" + n.name + "'");
    return it->second;
  });
}

// ---------------------------------------------------------------------------
// Symbolic differentiation.

namespace {

Expression diff(const NodePtr& n, const std::string& var) {
  switch (n->kind) {
    case Kind::Constant:
      return constant_expression(0.0);
    case Kind::Variable:
      return constant_expression(n->name == var ? 1.0 : 0.0);
    case Kind::Unary: {
      const Expression u(n->a);
      const Expression du = diff(n->a, var);
      switch (n->uop) {
        case UnaryOp::Neg:
          return make_neg(du);
        case UnaryOp::Sin:
          return make_mul(make_unary(UnaryOp::Cos, u), du);
        case UnaryOp::Cos:
          return make_neg(make_mul(make_unary(UnaryOp::Sin, u), du));
        case UnaryOp::Exp:
          return make_mul(make_unary(UnaryOp::Exp, u), du);
        case UnaryOp::Ln:
          return make_div(du, u);
        case UnaryOp::Sqrt:
          return make_div(du, make_mul(constant_expression(2.0), make_unary(UnaryOp::Sqrt, u)));
      }
      break;
    }
    case Kind::Binary: {
      const Expression a(n->a), b(n->b);
      switch (n->bop) {
        case BinaryOp::Add:
          return make_add(diff(n->a, var), diff(n->b, var));
        case BinaryOp::Sub:
          return make_sub(diff(n->a, var), diff(n->b, var));
        case BinaryOp::Mul:
          return make_add(make_mul(diff(n->a, var), b), make_mul(a, diff(n->b, var)));
        case BinaryOp::Div:
          return make_div(make_sub(make_mul(diff(n->a, var), b), make_mul(a, diff(n->b, var))),
                          make_mul(b, b));
        case BinaryOp::Pow: {
          const double c = n->b->value;
          return make_mul(make_mul(constant_expression(c), make_pow(a, c - 1.0)),
                          diff(n->a, var));
        }
      }
      break;
    }
  }
  throw ValidationError("malformed expression tree in differentiate");
}

}  // namespace

Expression differentiate(const Expression& e, const std::string& var) {
  if (!e.valid()) throw ValidationError("empty expression");
  return diff(e.root(), var);
}

// ---------------------------------------------------------------------------
// Printing: minimal parentheses, shortest round-trip numbers.

namespace {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5
int level(const NodePtr& n) {
  switch (n->kind) {
    case Kind::Constant:
      return n->value < 0 ? 3 : 5;
    case Kind::Variable:
      return 5;
    case Kind::Unary:
      return n->uop == UnaryOp::Neg ? 3 : 5;
    case Kind::Binary:
      switch (n->bop) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
          return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div:
          return 2;
        case BinaryOp::Pow:
          return 4;
      }
  }
  return 5;
}

void print(const NodePtr& n, std::string& out, int parent_level) {
  const int lv = level(n);
  const bool paren = lv < parent_level;
  if (paren) out += '(';
  switch (n->kind) {
    case Kind::Constant:
      out += format_double(n->value);
      break;
    case Kind::Variable:
      out += n->name;
      break;
    case Kind::Unary:
      if (n->uop == UnaryOp::Neg) {
        out += '-';
        print(n->a, out, 3);
      } else {
        switch (n->uop) {
          case UnaryOp::Sin: out += "sin"; break;
          case UnaryOp::Cos: out += "cos"; break;
          case UnaryOp::Exp: out += "exp"; break;
          case UnaryOp::Ln: out += "ln"; break;
          case UnaryOp::Sqrt: out += "sqrt"; break;
          case UnaryOp::Neg: break;
        }
        out += '(';
        print(n->a, out, 0);
        out += ')';
      }
      break;
    case Kind::Binary: {
      const char* op = nullptr;
      int lhs_level = lv, rhs_level = lv + 1;
      switch (n->bop) {
        case BinaryOp::Add: op = "+"; rhs_level = lv; break;
        case BinaryOp::Sub: op = "-"; break;
        case BinaryOp::Mul: op = "*"; rhs_level = lv; break;
        case BinaryOp::Div: op = "/"; break;
        case BinaryOp::Pow: op = "^"; lhs_level = 5; break;
      }
      print(n->a, out, lhs_level);
      out += op;
      if (n->bop == BinaryOp::Pow) {
        out += format_double(n->b->value);
      } else {
        print(n->b, out, rhs_level);
      }
      break;
    }
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const Expression& e) {
  if (!e.valid()) return "";
  std::string out;
  print(e.root(), out, 0);
  return out;
}

bool is_zero_constant(const Expression& e) {
  return e.valid() && e.root()->kind == Kind::Constant && e.root()->value == 0.0;
}

bool uses_symbol(const Expression& e, const std::string& name) {
  return find_symbol_subexpression(e, name).has_value();
}

namespace {

const Node* find_symbol(const NodePtr& n, const std::string& name) {
  if (!n) return nullptr;
  if (n->kind == Kind::Variable) return n->name == name ? n.get() : nullptr;
  if (n->a)
    if (const Node* hit = find_symbol(n->a, name)) return hit;
  if (n->b)
    if (const Node* hit = find_symbol(n->b, name)) return hit;
  return nullptr;
}

}  // namespace

std::optional<std::string> find_symbol_subexpression(const Expression& e,
                                                     const std::string& name) {
  if (!e.valid()) return std::nullopt;
  if (find_symbol(e.root(), name)) return to_string(e);
  return std::nullopt;
}

namespace {

NodePtr rebind_node(const NodePtr& n, const std::vector<std::string>& symbols) {
  switch (n->kind) {
    case Kind::Constant:
      return n;
    case Kind::Variable: {
      for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == n->name) {
          auto out = std::make_shared<Node>(*n);
          out->slot = static_cast<int>(i);
          return out;
        }
      throw ValidationError("cannot rebind: symbol '" + n->name + "' not declared");
    }
    case Kind::Unary: {
      auto out = std::make_shared<Node>(*n);
      out->a = rebind_node(n->a, symbols);
      return out;
    }
    case Kind::Binary: {
      auto out = std::make_shared<Node>(*n);
      out->a = rebind_node(n->a, symbols);
      out->b = rebind_node(n->b, symbols);
      return out;
    }
  }
  throw ValidationError("malformed expression tree in rebind");
}

}  // namespace

Expression rebind(const Expression& e, const std::vector<std::string>& symbols) {
  if (!e.valid()) throw ValidationError("empty expression");
  return Expression(rebind_node(e.root(), symbols));
}

std::vector<std::string> lagrangian_symbols(int dim) {
  std::vector<std::string> s;
  s.reserve(1 + 3 * static_cast<std::size_t>(dim));
  s.push_back("t");
  for (int i = 1; i <= dim; ++i) s.push_back("q" + std::to_string(i));
  for (int i = 1; i <= dim; ++i) s.push_back("v" + std::to_string(i));
  for (int i = 1; i <= dim; ++i) s.push_back("w" + std::to_string(i));
  return s;
}

Lagrangian make_lagrangian(const std::string& text, int dim) {
  if (dim < 1) throw ValidationError("Lagrangian dimension must be positive");
  Lagrangian L;
  L.dim = dim;
  L.symbols = lagrangian_symbols(dim);
  L.expr = parse_expression(text, L.symbols);
  L.dq.reserve(dim);
  L.dv.reserve(dim);
  L.dw.reserve(dim);
  for (int i = 1; i <= dim; ++i) {
    L.dq.push_back(differentiate(L.expr, "q" + std::to_string(i)));
    L.dv.push_back(differentiate(L.expr, "v" + std::to_string(i)));
    L.dw.push_back(differentiate(L.expr, "w" + std::to_string(i)));
  }
  return L;
}

}  // namespace fvc
