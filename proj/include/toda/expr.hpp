#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "toda/jet.hpp"

namespace toda {

// Parsed expression tree for a scalar function of one variable `t`.
// Nodes are immutable and shared; trees are safe to evaluate concurrently.
struct FuncExpr {
  enum class Kind {
    Constant,
    Var,
    Neg,
    Exp,
    Log,
    Sin,
    Cos,
    Sqrt,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // rhs is the constant exponent, stored in `value`
  };

  Kind kind;
  double value = 0.0;  // Constant payload, or the exponent for Pow
  std::shared_ptr<const FuncExpr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const FuncExpr>;

// Grammar: ^ binds tightest (constant exponent only), then unary -, then * /,
// then + -; binaries left-associative; parentheses; calls exp(...) log(...)
// sin(...) cos(...) sqrt(...); identifier `t`; whitespace insignificant.
ExprPtr parse_expr(std::string_view src);

// Pretty-print with minimal parentheses; re-parsing yields an identical tree.
std::string to_string(const FuncExpr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

bool structurally_equal(const FuncExpr& a, const FuncExpr& b);

// Exact jet of the expression at `at`, built by structural recursion.
TaylorJet eval_jet(const FuncExpr& f, double at, int order);
inline TaylorJet eval_jet(const ExprPtr& f, double at, int order) {
  return eval_jet(*f, at, order);
}

inline double eval_value(const FuncExpr& f, double at) {
  return eval_jet(f, at, 0).value();
}

}  // namespace toda
