#pragma once

#include <string>
#include <vector>

#include "homlind/modes.hpp"

namespace homlind {

// One harmonic: amplitude * sin(j.x) or amplitude * cos(j.x).
struct ICTerm {
  double amplitude = 1.0;
  bool is_sin = true;
  Mode wavevec;
};

// Initial condition as a finite list of sin/cos harmonics with integer
// wavevectors.  Text form: terms joined by +/-, each term
// "[coeff [*]] sin|cos(arg)" with arg a +/- combination of [int]x and
// [int]y, e.g. "sin(x) + 0.5 sin(x-y)" or "cos(y)+0.25*cos(x+2y)".
struct ICSpec {
  std::vector<ICTerm> terms;

  static ICSpec parse(const std::string& text, int dimension);
  std::string to_string() const;

  bool empty() const { return terms.empty(); }
  // Pointwise evaluation (for grid-based reference solvers).
  double eval(double x, double y = 0.0) const;
};

}  // namespace homlind
