#pragma once

#include <vector>

#include "toda/errors.hpp"

namespace toda {

// Truncated Taylor expansion of a scalar function at a point. Coefficients are
// stored Taylor-normalized, coeff(m) = f^(m)(base)/m!, which keeps magnitudes
// balanced at order ~10; derivative() multiplies the factorial back in.
class TaylorJet {
 public:
  TaylorJet(double base_point, int order);

  static TaylorJet constant(double value, double base_point, int order);
  static TaylorJet variable(double base_point, int order);  // jet of f(t) = t

  double base_point() const { return base_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }

  double coeff(int m) const { return c_[static_cast<std::size_t>(m)]; }
  double& coeff(int m) { return c_[static_cast<std::size_t>(m)]; }
  double value() const { return c_[0]; }
  double derivative(int m) const;  // m! * coeff(m)

  const std::vector<double>& coeffs() const { return c_; }

  bool all_finite() const;

  // d/dx as a jet of one order less.
  TaylorJet derivative_jet() const;
  // Truncate (or keep) to the given order; pre: new_order <= order().
  TaylorJet truncated(int new_order) const;

 private:
  double base_;
  std::vector<double> c_;
};

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b);
TaylorJet operator-(const TaylorJet& a, const TaylorJet& b);
TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
TaylorJet operator/(const TaylorJet& a, const TaylorJet& b);
TaylorJet operator-(const TaylorJet& a);
TaylorJet operator*(double s, const TaylorJet& a);
TaylorJet operator+(const TaylorJet& a, double s);

// a(x)^p on the real branch; pre: a.coeff(0) > 0.
TaylorJet pow(const TaylorJet& a, double p);
TaylorJet exp(const TaylorJet& a);
TaylorJet log(const TaylorJet& a);
TaylorJet sqrt(const TaylorJet& a);
// sin and cos advance through the paired recurrence s' = c u', c' = -s u'.
std::pair<TaylorJet, TaylorJet> sincos(const TaylorJet& a);
TaylorJet sin(const TaylorJet& a);
TaylorJet cos(const TaylorJet& a);

}  // namespace toda
