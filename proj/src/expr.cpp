#include "toda/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace toda {

namespace {

ExprPtr node(FuncExpr::Kind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr,
             double value = 0.0) {
  auto e = std::make_shared<FuncExpr>();
  e->kind = k;
  e->value = value;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse() {
    skip_ws();
    if (at_end()) throw parse_error(pos_, "an expression");
    ExprPtr e = parse_sum();
    skip_ws();
    if (!at_end()) throw parse_error(pos_, "end of input or a binary operator");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        e = node(FuncExpr::Kind::Add, e, parse_term());
      else if (consume('-'))
        e = node(FuncExpr::Kind::Sub, e, parse_term());
      else
        return e;
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    for (;;) {
      skip_ws();
      if (consume('*'))
        e = node(FuncExpr::Kind::Mul, e, parse_unary());
      else if (consume('/'))
        e = node(FuncExpr::Kind::Div, e, parse_unary());
      else
        return e;
    }
  }

  ExprPtr parse_unary() {
    skip_ws();
    if (consume('-')) return node(FuncExpr::Kind::Neg, parse_unary());
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    skip_ws();
    if (consume('^')) {
      double expo = parse_exponent();
      return node(FuncExpr::Kind::Pow, base, nullptr, expo);
    }
    return base;
  }

  // Exponents must fold to a constant: a signed numeric literal, or a
  // parenthesized constant expression (no `t` inside).
  double parse_exponent() {
    skip_ws();
    if (peek() == '(') {
      std::size_t start = pos_;
      ++pos_;
      ExprPtr e = parse_sum();
      skip_ws();
      if (!consume(')')) throw parse_error(pos_, "`)`");
      if (!is_constant(*e))
        throw parse_error(start, "a constant exponent (no `t` in `^` exponents)");
      return fold_constant(*e);
    }
    double sign = 1.0;
    if (consume('-')) sign = -1.0;
    skip_ws();
    return sign * parse_number();
  }

  static bool is_constant(const FuncExpr& e) {
    if (e.kind == FuncExpr::Kind::Var) return false;
    if (e.lhs && !is_constant(*e.lhs)) return false;
    if (e.rhs && !is_constant(*e.rhs)) return false;
    return true;
  }

  static double fold_constant(const FuncExpr& e) {
    return eval_jet(e, 0.0, 0).value();
  }

  double parse_number() {
    skip_ws();
    if (at_end() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'))
      throw parse_error(pos_, "a number");
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc()) throw parse_error(pos_, "a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return out;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (at_end())
      throw parse_error(pos_, "a number, `t`, `(`, or a function call");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return node(FuncExpr::Kind::Constant, nullptr, nullptr, parse_number());
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      skip_ws();
      if (!consume(')')) throw parse_error(pos_, "`)`");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      std::string_view ident = src_.substr(start, pos_ - start);
      if (ident == "t") return node(FuncExpr::Kind::Var);
      FuncExpr::Kind k;
      if (ident == "exp")
        k = FuncExpr::Kind::Exp;
      else if (ident == "log")
        k = FuncExpr::Kind::Log;
      else if (ident == "sin")
        k = FuncExpr::Kind::Sin;
      else if (ident == "cos")
        k = FuncExpr::Kind::Cos;
      else if (ident == "sqrt")
        k = FuncExpr::Kind::Sqrt;
      else
        throw parse_error(start, "`t` or one of exp, log, sin, cos, sqrt");
      skip_ws();
      if (!consume('(')) throw parse_error(pos_, "`(`");
      ExprPtr arg = parse_sum();
      skip_ws();
      if (!consume(')')) throw parse_error(pos_, "`)`");
      return node(k, arg);
    }
    throw parse_error(pos_, "a number, `t`, `(`, or a function call");
  }
};

int precedence(FuncExpr::Kind k) {
  switch (k) {
    case FuncExpr::Kind::Add:
    case FuncExpr::Kind::Sub:
      return 1;
    case FuncExpr::Kind::Mul:
    case FuncExpr::Kind::Div:
      return 2;
    case FuncExpr::Kind::Neg:
      return 3;
    case FuncExpr::Kind::Pow:
      return 4;
    default:
      return 5;  // atoms
  }
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

void print(const FuncExpr& e, std::string& out) {
  auto child = [&out](const FuncExpr& c, int min_prec) {
    if (precedence(c.kind) < min_prec) {
      out += '(';
      print(c, out);
      out += ')';
    } else {
      print(c, out);
    }
  };
  switch (e.kind) {
    case FuncExpr::Kind::Constant:
      out += format_number(e.value);
      break;
    case FuncExpr::Kind::Var:
      out += 't';
      break;
    case FuncExpr::Kind::Neg:
      out += '-';
      child(*e.lhs, precedence(FuncExpr::Kind::Neg));
      break;
    case FuncExpr::Kind::Exp:
    case FuncExpr::Kind::Log:
    case FuncExpr::Kind::Sin:
    case FuncExpr::Kind::Cos:
    case FuncExpr::Kind::Sqrt: {
      const char* name = e.kind == FuncExpr::Kind::Exp   ? "exp"
                         : e.kind == FuncExpr::Kind::Log ? "log"
                         : e.kind == FuncExpr::Kind::Sin ? "sin"
                         : e.kind == FuncExpr::Kind::Cos ? "cos"
                                                         : "sqrt";
      out += name;
      out += '(';
      print(*e.lhs, out);
      out += ')';
      break;
    }
    case FuncExpr::Kind::Add:
      child(*e.lhs, 1);
      out += " + ";
      child(*e.rhs, 2);
      break;
    case FuncExpr::Kind::Sub:
      child(*e.lhs, 1);
      out += " - ";
      child(*e.rhs, 2);
      break;
    case FuncExpr::Kind::Mul:
      child(*e.lhs, 2);
      out += "*";
      child(*e.rhs, 3);
      break;
    case FuncExpr::Kind::Div:
      child(*e.lhs, 2);
      out += "/";
      child(*e.rhs, 3);
      break;
    case FuncExpr::Kind::Pow:
      child(*e.lhs, 5);  // parenthesize any compound base
      out += '^';
      if (e.value < 0) {
        out += '(';
        out += format_number(e.value);
        out += ')';
      } else {
        out += format_number(e.value);
      }
      break;
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view src) {
  if (src.empty()) throw parse_error(0, "a non-empty expression");
  return Parser(src).parse();
}

std::string to_string(const FuncExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

bool structurally_equal(const FuncExpr& a, const FuncExpr& b) {
  if (a.kind != b.kind || a.value != b.value) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

TaylorJet eval_jet(const FuncExpr& f, double at, int order) {
  switch (f.kind) {
    case FuncExpr::Kind::Constant:
      return TaylorJet::constant(f.value, at, order);
    case FuncExpr::Kind::Var:
      return TaylorJet::variable(at, order);
    case FuncExpr::Kind::Neg:
      return -eval_jet(*f.lhs, at, order);
    case FuncExpr::Kind::Add:
      return eval_jet(*f.lhs, at, order) + eval_jet(*f.rhs, at, order);
    case FuncExpr::Kind::Sub:
      return eval_jet(*f.lhs, at, order) - eval_jet(*f.rhs, at, order);
    case FuncExpr::Kind::Mul:
      return eval_jet(*f.lhs, at, order) * eval_jet(*f.rhs, at, order);
    case FuncExpr::Kind::Div: {
      TaylorJet num = eval_jet(*f.lhs, at, order);
      TaylorJet den = eval_jet(*f.rhs, at, order);
      if (den.value() == 0.0) throw eval_error("division by zero", to_string(f));
      return num / den;
    }
    case FuncExpr::Kind::Exp:
      return exp(eval_jet(*f.lhs, at, order));
    case FuncExpr::Kind::Log: {
      TaylorJet a = eval_jet(*f.lhs, at, order);
      if (a.value() <= 0.0) throw eval_error("log of nonpositive value", to_string(f));
      return log(a);
    }
    case FuncExpr::Kind::Sin:
      return sin(eval_jet(*f.lhs, at, order));
    case FuncExpr::Kind::Cos:
      return cos(eval_jet(*f.lhs, at, order));
    case FuncExpr::Kind::Sqrt: {
      TaylorJet a = eval_jet(*f.lhs, at, order);
      if (a.value() <= 0.0)
        throw eval_error("sqrt of nonpositive value", to_string(f));
      return sqrt(a);
    }
    case FuncExpr::Kind::Pow: {
      TaylorJet a = eval_jet(*f.lhs, at, order);
      double p = f.value;
      // Integer exponents stay on the algebraic route so negative bases work.
      if (p == static_cast<long long>(p) && std::abs(p) <= 64) {
        long long ip = static_cast<long long>(p);
        if (ip == 0) return TaylorJet::constant(1.0, at, order);
        TaylorJet r = TaylorJet::constant(1.0, at, order);
        for (long long k = 0; k < std::llabs(ip); ++k) r = r * a;
        if (ip < 0) {
          if (a.value() == 0.0)
            throw eval_error("negative power of zero value", to_string(f));
          return TaylorJet::constant(1.0, at, order) / r;
        }
        return r;
      }
      if (a.value() <= 0.0)
        throw eval_error("fractional power of nonpositive value", to_string(f));
      return pow(a, p);
    }
  }
  throw structural_error("corrupt expression node");
}

}  // namespace toda
