#include "homlind/hierarchy.hpp"

#include <stdexcept>

namespace homlind {

VectorXcd DeformationLevel::eval(double t) const {
  VectorXcd out(static_cast<Eigen::Index>(coeff.size()));
  for (size_t e = 0; e < coeff.size(); ++e)
    out[static_cast<Eigen::Index>(e)] = coeff[e].eval(t);
  return out;
}

DeformationLevel solve_order_zero(const VectorXd& sigma,
                                  const CoeffVector& c0) {
  if (sigma.size() != c0.values.size())
    throw std::invalid_argument("rate/coefficient size mismatch");
  DeformationLevel lvl;
  lvl.order = 0;
  lvl.coeff.resize(static_cast<size_t>(sigma.size()));
  for (Eigen::Index e = 0; e < sigma.size(); ++e) {
    const cplx c = c0.values[e];
    if (c != 0.0) lvl.coeff[static_cast<size_t>(e)] = ExpSum(c, sigma[e], 0);
  }
  return lvl;
}

std::vector<ExpSum> forcing(int m, const std::vector<DeformationLevel>& levels,
                            const ProblemDef& problem, const ModeSet& ms,
                            const HamConfig& config) {
  if (m < 1) throw std::invalid_argument("forcing is defined for orders >= 1");
  if (static_cast<int>(levels.size()) < m)
    throw std::invalid_argument("missing lower deformation levels");
  const size_t nent = levels[0].coeff.size();

  // Nonlinear source S^(m-1) = sum over splittings of the convolution.
  std::vector<ExpSum> source(nent);
  for (int alpha = 0; alpha <= m - 1; ++alpha) {
    const int beta = m - 1 - alpha;
    auto prod = nonlinear_t<ExpSum>(problem, ms,
                                    levels[static_cast<size_t>(alpha)].coeff,
                                    levels[static_cast<size_t>(beta)].coeff);
    for (size_t e = 0; e < nent; ++e) source[e] += prod[e];
  }

  const double mu = config.mu;
  std::vector<ExpSum> f(nent);
  if (m == 1) {
    for (size_t e = 0; e < nent; ++e) f[e] = source[e] * cplx(-mu, 0.0);
    return f;
  }
  const VectorXd sigma = linear_rates(problem, ms);
  for (size_t e = 0; e < nent; ++e) {
    f[e] = source[e] * cplx(-mu, 0.0);
    if (mu != -1.0) {
      const ExpSum& prev = levels[static_cast<size_t>(m - 1)].coeff[e];
      ExpSum residual = prev.derivative() +
                        prev * cplx(sigma[static_cast<Eigen::Index>(e)], 0.0);
      f[e] += residual * cplx(1.0 + mu, 0.0);
    }
  }
  return f;
}

std::vector<ExpSum> solve_forced_modewise(const VectorXd& sigma,
                                          const std::vector<ExpSum>& f) {
  if (static_cast<size_t>(sigma.size()) != f.size())
    throw std::invalid_argument("rate/forcing size mismatch");
  std::vector<ExpSum> out(f.size());
  for (size_t e = 0; e < f.size(); ++e) {
    const double sig = sigma[static_cast<Eigen::Index>(e)];
    for (const ExpTerm& term : f[e].terms()) {
      const cplx v = term.amp;
      const cplx lam = term.rate;
      const int k = term.power;
      const cplx delta = cplx(sig, 0.0) - lam;
      const double scale = std::max(std::abs(cplx(sig, 0.0)), std::abs(lam));
      if (std::abs(delta) <= kResonanceTol * scale || delta == 0.0) {
        out[e] += ExpSum(v / static_cast<double>(k + 1), lam, k + 1);
        continue;
      }
      double fact = 1.0;  // k!/(k-i)!
      cplx dpow = delta;  // delta^(i+1)
      double sign = 1.0;  // (-1)^i
      for (int i = 0; i <= k; ++i) {
        out[e] += ExpSum(v * sign * fact / dpow, lam, k - i);
        if (i < k) {
          fact *= static_cast<double>(k - i);
          dpow *= delta;
          sign = -sign;
        }
      }
      // fact holds k!, dpow holds delta^(k+1), sign is (-1)^k.
      out[e] += ExpSum(-v * sign * fact / dpow, cplx(sig, 0.0), 0);
    }
  }
  return out;
}

std::vector<DeformationLevel> build_hierarchy(const ProblemDef& problem,
                                              const ModeSet& ms,
                                              const CoeffVector& c0,
                                              const HamConfig& config) {
  if (config.m_tilde < 0)
    throw std::invalid_argument("series order must be >= 0");
  const VectorXd sigma = linear_rates(problem, ms);
  std::vector<DeformationLevel> levels;
  levels.reserve(static_cast<size_t>(config.m_tilde) + 1);
  levels.push_back(solve_order_zero(sigma, c0));
  for (int m = 1; m <= config.m_tilde; ++m) {
    DeformationLevel lvl;
    lvl.order = m;
    lvl.coeff = solve_forced_modewise(sigma,
                                      forcing(m, levels, problem, ms, config));
    levels.push_back(std::move(lvl));
  }
  return levels;
}

}  // namespace homlind
