#pragma once

#include <vector>

#include "homlind/expsum.hpp"
#include "homlind/problem.hpp"

namespace homlind {

struct HamConfig {
  int m_tilde = 0;   // series truncation order
  double mu = -1.0;  // convergence-control constant
};

// Exact per-(field,mode) solution coefficients of one deformation order.
struct DeformationLevel {
  int order = 0;
  std::vector<ExpSum> coeff;  // length fields * modes

  VectorXcd eval(double t) const;
};

// Order-0 solution of y' = My with y(0) = c0: single decaying term per entry.
DeformationLevel solve_order_zero(const VectorXd& sigma, const CoeffVector& c0);

// Forcing f^(m-1) driving order m >= 1.  With mu = -1 this is the nonlinear
// source S^(m-1) = sum_{a+b=m-1} N(u^(a), u^(b)); for general mu the full
// combination (1+mu)(d/dt - M) u^(m-1) - mu S^(m-1) is formed exactly
// (the m = 1 case reduces to -mu S^(0)).
std::vector<ExpSum> forcing(int m, const std::vector<DeformationLevel>& levels,
                            const ProblemDef& problem, const ModeSet& ms,
                            const HamConfig& config);

// Zero-initial-condition response of y' = My + f(t) for diagonal M, using
// the closed form per forcing term; rates within relative tolerance 1e-9 of
// a mode's decay produce the exact resonant t^(k+1) profile instead.
std::vector<ExpSum> solve_forced_modewise(const VectorXd& sigma,
                                          const std::vector<ExpSum>& f);

// All levels 0..m_tilde.
std::vector<DeformationLevel> build_hierarchy(const ProblemDef& problem,
                                              const ModeSet& ms,
                                              const CoeffVector& c0,
                                              const HamConfig& config);

}  // namespace homlind
