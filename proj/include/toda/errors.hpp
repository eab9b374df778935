#pragma once

#include <stdexcept>
#include <string>

namespace toda {

/// Contract violations: mismatched orders, index ranges, wrong counts.
struct structural_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Division by a jet with zero constant term, with the base point attached.
struct singularity_error : std::runtime_error {
  double base_point;
  singularity_error(const std::string& what, double at)
      : std::runtime_error(what + " (at base point " + std::to_string(at) + ")"),
        base_point(at) {}
};

/// Real branch undefined: fractional power / log / sqrt of a nonpositive value.
struct domain_error : std::runtime_error {
  double base_point;
  domain_error(const std::string& what, double at)
      : std::runtime_error(what + " (at base point " + std::to_string(at) + ")"),
        base_point(at) {}
};

/// Expression evaluation failure; carries the offending subexpression text.
struct eval_error : std::runtime_error {
  std::string subexpr;
  eval_error(const std::string& what, std::string subexpression)
      : std::runtime_error(what + " in subexpression `" + subexpression + "`"),
        subexpr(std::move(subexpression)) {}
};

/// Syntax error with byte offset and the set of tokens that would have been accepted.
struct parse_error : std::runtime_error {
  std::size_t offset;
  std::string expected;
  parse_error(std::size_t at, std::string expected_tokens)
      : std::runtime_error("syntax error at offset " + std::to_string(at) +
                           ", expected " + expected_tokens),
        offset(at),
        expected(std::move(expected_tokens)) {}
};

/// Group-relation precondition violated (reports the defect norm).
struct precondition_error : std::runtime_error {
  double defect;
  precondition_error(const std::string& what, double defect_norm)
      : std::runtime_error(what + " (defect " + std::to_string(defect_norm) + ")"),
        defect(defect_norm) {}
};

/// Derivative rows not linearly independent at the completion point.
struct degeneracy_error : std::runtime_error {
  double at;
  degeneracy_error(const std::string& what, double x)
      : std::runtime_error(what + " (at x = " + std::to_string(x) + ")"), at(x) {}
};

/// Induction-vs-direct-pairing mismatch in the bilinear table, naming (i, j).
struct inconsistency_error : std::runtime_error {
  int i, j;
  inconsistency_error(const std::string& what, int ii, int jj)
      : std::runtime_error(what + " at entry (" + std::to_string(ii) + "," +
                           std::to_string(jj) + ")"),
        i(ii),
        j(jj) {}
};

/// Nonpositive tau under log/sqrt; carries (x, y, i).
struct singular_point_error : std::runtime_error {
  double x, y;
  int index;
  singular_point_error(const std::string& what, double px, double py, int i)
      : std::runtime_error(what + " (x = " + std::to_string(px) + ", y = " +
                           std::to_string(py) + ", i = " + std::to_string(i) + ")"),
        x(px),
        y(py),
        index(i) {}
};

}  // namespace toda
