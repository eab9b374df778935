#pragma once

#include <span>
#include <vector>

#include "toda/expr.hpp"
#include "toda/jet.hpp"

namespace toda {

// A finite sequence of integrand labels (a_1,...,a_k) naming the nested
// integral I(a_1...a_k) from 0. Empty means I() = 1. Adjacent repetitions are
// meaningful and kept.
struct IterSeq {
  std::vector<int> labels;  // 1-based

  IterSeq() = default;
  explicit IterSeq(std::vector<int> l) : labels(std::move(l)) {}

  static IterSeq ascending(int from, int to);   // (from, from+1, ..., to); empty if to < from
  static IterSeq descending(int from, int to);  // (from, from-1, ..., to); empty if to > from

  IterSeq then(int label) const;
  IterSeq then(const IterSeq& tail) const;
  IterSeq tail() const;  // drop the first label

  bool empty() const { return labels.empty(); }
  std::size_t size() const { return labels.size(); }
};

// The integrand functions phi_1..phi_m on [0, x_max]; all integrals anchor at 0.
class IntegrandSet {
 public:
  IntegrandSet(std::vector<ExprPtr> funcs, double x_max);

  int size() const { return static_cast<int>(funcs_.size()); }
  double x_max() const { return x_max_; }
  const ExprPtr& func(int label) const;  // 1-based
  double value(int label, double x) const;
  TaylorJet jet(int label, double x, int order) const;

 private:
  std::vector<ExprPtr> funcs_;
  double x_max_;
};

// Fixed-step classical RK4 on the triangular suffix system; step 0 means the
// default x_max/4096.
struct QuadOptions {
  double step = 0.0;
  double resolved_step(double x_max) const {
    return step > 0.0 ? step : x_max / 4096.0;
  }
};

std::vector<double> eval_iterseq(const IntegrandSet& phis, const IterSeq& seq,
                                 std::span<const double> points,
                                 const QuadOptions& quad = {});

struct EvalWithError {
  std::vector<double> values;
  double error_estimate;  // max over points of |value_h - value_{h/2}|
};
EvalWithError eval_iterseq_with_error(const IntegrandSet& phis, const IterSeq& seq,
                                      std::span<const double> points,
                                      const QuadOptions& quad = {});

// Jet of I(seq) at x: order-0 values of all suffix integrals come from the RK4
// sweep; every higher coefficient is exact by the Leibniz recursion on
// s_r' = phi_{a_r} s_{r+1}, so only the order-0 layer carries quadrature error.
TaylorJet lift_iterseq_jet(const IntegrandSet& phis, const IterSeq& seq, double x,
                           int order, const QuadOptions& quad = {});

// Batched form: jets of several sequences at several (sorted) points from one
// integration sweep. result[ix][iseq].
std::vector<std::vector<TaylorJet>> lift_iterseq_jets_grid(
    const IntegrandSet& phis, std::span<const IterSeq> seqs,
    std::span<const double> xs, int order, const QuadOptions& quad = {});

// |I(a) I(b) - int phi_{a_1} I(a_2..) I(b) - int phi_{b_1} I(a) I(b_2..)|
// with the right-hand integrals tracked as extra product states in the sweep.
double check_shuffle_product(const IntegrandSet& phis, const IterSeq& a,
                             const IterSeq& b, double x,
                             const QuadOptions& quad = {});

// |sum_{i=0}^n (-1)^i I(1->i) I(n->i+1)| at x; returns 0 for n = 0 by the
// stated convention.
double check_alternating_sum(const IntegrandSet& phis, int n, double x,
                             const QuadOptions& quad = {});

enum class PairingKind { JDelayed, JDerivative, KDelayed, KDerivative };

struct PairingCheck {
  double value;
  double expected;
};

// Pairings of delayed/derivative vectors of iterated integrals against the
// skew-diagonal J (line families) or the D-family K, with the matching swap.
// J kinds take phis as phi_1..phi_n directly; K kinds take the D_n rank
// functions phi_1..phi_n (n >= 3) and extend to labels 1..2n-2 by the mirror
// phi_{2n-1-j} = phi_j, so the D-family prefactor
// f_0 = 1/(phi_1...phi_{n-2} sqrt(phi_{n-1}) sqrt(phi_n)) applies.
PairingCheck bilinear_pairing_check(PairingKind kind, const IntegrandSet& phis,
                                    int i, int j, double x, int order,
                                    const QuadOptions& quad = {});

// Component sequences of the D_n chiral vector (length 2n, labels 1..n): the
// ascent 1..n-2 branches through n-1 and n, then each tail is the sum of the
// two branch orders continued by the common descent.
std::vector<std::vector<IterSeq>> dn_component_sequences(int n);

}  // namespace toda
