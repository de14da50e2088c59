#include "homlind/duhamel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homlind {

namespace {

constexpr int kPanelOrder = 20;

struct GaussRule {
  std::array<double, kPanelOrder> node{};
  std::array<double, kPanelOrder> weight{};
};

// Nodes/weights of the 20-point rule on [-1,1] via Newton iteration on the
// Legendre recurrence.
GaussRule make_rule() {
  GaussRule r;
  const int n = kPanelOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.node[static_cast<size_t>(i)] = -x;
    r.node[static_cast<size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weight[static_cast<size_t>(i)] = w;
    r.weight[static_cast<size_t>(n - 1 - i)] = w;
  }
  return r;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

cplx panel(const std::function<cplx(double)>& f, double a, double b) {
  const GaussRule& r = rule();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx acc = 0.0;
  for (int i = 0; i < kPanelOrder; ++i)
    acc += r.weight[static_cast<size_t>(i)] *
           f(mid + half * r.node[static_cast<size_t>(i)]);
  return acc * half;
}

cplx refine(const std::function<cplx(double)>& f, double a, double b,
            double tol, cplx whole, int depth) {
  if (depth > 40)
    throw std::runtime_error("adaptive quadrature failed to converge");
  const double m = 0.5 * (a + b);
  const cplx left = panel(f, a, m);
  const cplx right = panel(f, m, b);
  if (std::abs(left + right - whole) <= tol) return left + right;
  return refine(f, a, m, 0.5 * tol, left, depth + 1) +
         refine(f, m, b, 0.5 * tol, right, depth + 1);
}

}  // namespace

cplx integrate_adaptive(const std::function<cplx(double)>& f, double a,
                        double b, double abs_tol) {
  if (a == b) return 0.0;
  return refine(f, a, b, abs_tol, panel(f, a, b), 0);
}

VectorXcd duhamel_quadrature(const VectorXcd& M_diag,
                             const std::vector<ExpSum>& f, double T,
                             double abs_tol) {
  if (T < 0.0) throw std::invalid_argument("integration horizon must be >= 0");
  if (static_cast<size_t>(M_diag.size()) != f.size())
    throw std::invalid_argument("diagonal/forcing size mismatch");
  VectorXcd out = VectorXcd::Zero(M_diag.size());
  if (T == 0.0) return out;
  for (Eigen::Index e = 0; e < M_diag.size(); ++e) {
    const ExpSum& fe = f[static_cast<size_t>(e)];
    if (fe.empty()) continue;
    const cplx Me = M_diag[e];
    out[e] = integrate_adaptive(
        [&](double s) { return std::exp(Me * (T - s)) * fe.eval(s); }, 0.0, T,
        abs_tol);
  }
  return out;
}

}  // namespace homlind
