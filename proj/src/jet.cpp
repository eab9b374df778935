#include "toda/jet.hpp"

#include <cmath>
#include <string>

namespace toda {

namespace {

void require_compatible(const TaylorJet& a, const TaylorJet& b) {
  if (a.order() != b.order())
    throw structural_error("jet order mismatch: " + std::to_string(a.order()) +
                           " vs " + std::to_string(b.order()));
  if (a.base_point() != b.base_point())
    throw structural_error("jet base point mismatch");
}

}  // namespace

TaylorJet::TaylorJet(double base_point, int order) : base_(base_point) {
  if (order < 0) throw structural_error("jet order must be nonnegative");
  c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

TaylorJet TaylorJet::constant(double value, double base_point, int order) {
  TaylorJet j(base_point, order);
  j.c_[0] = value;
  return j;
}

TaylorJet TaylorJet::variable(double base_point, int order) {
  TaylorJet j(base_point, order);
  j.c_[0] = base_point;
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double TaylorJet::derivative(int m) const {
  if (m < 0 || m > order())
    throw structural_error("derivative order " + std::to_string(m) +
                           " outside jet order " + std::to_string(order()));
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= k;
  return c_[static_cast<std::size_t>(m)] * fact;
}

bool TaylorJet::all_finite() const {
  for (double v : c_)
    if (!std::isfinite(v)) return false;
  return true;
}

TaylorJet TaylorJet::derivative_jet() const {
  if (order() == 0)
    throw structural_error("cannot differentiate an order-0 jet");
  TaylorJet d(base_, order() - 1);
  for (int m = 0; m < order(); ++m)
    d.c_[static_cast<std::size_t>(m)] = (m + 1) * c_[static_cast<std::size_t>(m) + 1];
  return d;
}

TaylorJet TaylorJet::truncated(int new_order) const {
  if (new_order < 0 || new_order > order())
    throw structural_error("truncation order out of range");
  TaylorJet t(base_, new_order);
  for (int m = 0; m <= new_order; ++m) t.c_[static_cast<std::size_t>(m)] = coeff(m);
  return t;
}

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  TaylorJet r(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) r.coeff(m) = a.coeff(m) + b.coeff(m);
  return r;
}

TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  TaylorJet r(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) r.coeff(m) = a.coeff(m) - b.coeff(m);
  return r;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  TaylorJet r(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) {
    double s = 0.0;
    for (int k = 0; k <= m; ++k) s += a.coeff(k) * b.coeff(m - k);
    r.coeff(m) = s;
  }
  return r;
}

TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  if (b.coeff(0) == 0.0)
    throw singularity_error("division by jet with zero constant term",
                            b.base_point());
  TaylorJet q(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) {
    double s = a.coeff(m);
    for (int k = 1; k <= m; ++k) s -= b.coeff(k) * q.coeff(m - k);
    q.coeff(m) = s / b.coeff(0);
  }
  return q;
}

TaylorJet operator-(const TaylorJet& a) {
  TaylorJet r(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) r.coeff(m) = -a.coeff(m);
  return r;
}

TaylorJet operator*(double s, const TaylorJet& a) {
  TaylorJet r(a.base_point(), a.order());
  for (int m = 0; m <= a.order(); ++m) r.coeff(m) = s * a.coeff(m);
  return r;
}

TaylorJet operator+(const TaylorJet& a, double s) {
  TaylorJet r = a;
  r.coeff(0) += s;
  return r;
}

TaylorJet pow(const TaylorJet& a, double p) {
  if (p == 1.0) return a;
  if (a.coeff(0) <= 0.0)
    throw domain_error("real fractional power of nonpositive jet value",
                       a.base_point());
  TaylorJet v(a.base_point(), a.order());
  v.coeff(0) = std::pow(a.coeff(0), p);
  // (a^p)' a = p a' a^p, coefficientwise
  for (int m = 1; m <= a.order(); ++m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j)
      s += (p * j - (m - j)) * a.coeff(j) * v.coeff(m - j);
    v.coeff(m) = s / (m * a.coeff(0));
  }
  return v;
}

TaylorJet exp(const TaylorJet& a) {
  TaylorJet v(a.base_point(), a.order());
  v.coeff(0) = std::exp(a.coeff(0));
  for (int m = 1; m <= a.order(); ++m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j) s += j * a.coeff(j) * v.coeff(m - j);
    v.coeff(m) = s / m;
  }
  return v;
}

TaylorJet log(const TaylorJet& a) {
  if (a.coeff(0) <= 0.0)
    throw domain_error("log of nonpositive jet value", a.base_point());
  TaylorJet v(a.base_point(), a.order());
  v.coeff(0) = std::log(a.coeff(0));
  for (int m = 1; m <= a.order(); ++m) {
    double s = m * a.coeff(m);
    for (int j = 1; j < m; ++j) s -= j * v.coeff(j) * a.coeff(m - j);
    v.coeff(m) = s / (m * a.coeff(0));
  }
  return v;
}

TaylorJet sqrt(const TaylorJet& a) {
  if (a.coeff(0) <= 0.0)
    throw domain_error("sqrt of nonpositive jet value", a.base_point());
  return pow(a, 0.5);
}

std::pair<TaylorJet, TaylorJet> sincos(const TaylorJet& a) {
  TaylorJet s(a.base_point(), a.order());
  TaylorJet c(a.base_point(), a.order());
  s.coeff(0) = std::sin(a.coeff(0));
  c.coeff(0) = std::cos(a.coeff(0));
  for (int m = 1; m <= a.order(); ++m) {
    double ds = 0.0, dc = 0.0;
    for (int j = 1; j <= m; ++j) {
      ds += j * a.coeff(j) * c.coeff(m - j);
      dc -= j * a.coeff(j) * s.coeff(m - j);
    }
    s.coeff(m) = ds / m;
    c.coeff(m) = dc / m;
  }
  return {s, c};
}

TaylorJet sin(const TaylorJet& a) { return sincos(a).first; }
TaylorJet cos(const TaylorJet& a) { return sincos(a).second; }

}  // namespace toda
