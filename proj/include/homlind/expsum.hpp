#pragma once

#include <vector>

#include "homlind/common.hpp"

namespace homlind {

// One term amp * t^power * exp(-rate * t).
struct ExpTerm {
  cplx amp;
  cplx rate;   // Re(rate) >= 0 for decaying profiles
  int power = 0;
};

// Finite sum of exponential-polynomial terms, closed under addition,
// multiplication, scalar scaling, differentiation, and rate shifts.
// Terms are kept normalized: sorted by (power, Re rate, Im rate), terms
// with coincident (rate, power) merged, negligible amplitudes pruned.
class ExpSum {
 public:
  ExpSum() = default;
  ExpSum(cplx amp, cplx rate, int power = 0);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int size() const { return static_cast<int>(terms_.size()); }

  cplx eval(double t) const;

  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }

  ExpSum operator*(const ExpSum& o) const;
  ExpSum operator*(cplx s) const;
  friend ExpSum operator*(cplx s, const ExpSum& e) { return e * s; }

  // d/dt applied term-wise (exact).
  ExpSum derivative() const;
  // Multiplies every term by exp(-delta * t), i.e. rate -> rate + delta.
  ExpSum shift_rate(cplx delta) const;

  double max_abs_amp() const;

 private:
  void normalize();
  std::vector<ExpTerm> terms_;
};

}  // namespace homlind
