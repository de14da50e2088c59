#include "homlind/problem.hpp"

namespace homlind {

void ProblemDef::validate() const {
  if (nu <= 0.0) throw std::invalid_argument("viscosity must be positive");
  if (kind == ProblemKind::ReducedMHD && eta <= 0.0)
    throw std::invalid_argument("resistivity must be positive");
}

double CoeffVector::conjugate_symmetry_defect() const {
  double worst = 0.0;
  for (int f = 0; f < fields; ++f) {
    for (int i = 0; i < modes.size(); ++i) {
      const Mode m = modes.at(i);
      const int im = modes.index_of({-m.jx, -m.jy});
      worst = std::max(worst, std::abs(at(f, i) - std::conj(at(f, im))));
    }
  }
  return worst;
}

VectorXd linear_rates(const ProblemDef& p, const ModeSet& ms) {
  const int n = ms.size();
  VectorXd sigma(static_cast<Eigen::Index>(p.fields()) * n);
  for (int i = 0; i < n; ++i) {
    const Mode m = ms.at(i);
    const double k2 = static_cast<double>(m.jx) * m.jx +
                      static_cast<double>(m.jy) * m.jy;
    sigma[i] = p.nu * k2;
    if (p.fields() == 2) sigma[n + i] = p.eta * k2;
  }
  return sigma;
}

MatrixXcd linear_matrix(const ProblemDef& p, const ModeSet& ms) {
  const VectorXd sigma = linear_rates(p, ms);
  MatrixXcd M = MatrixXcd::Zero(sigma.size(), sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) M(i, i) = -sigma[i];
  return M;
}

CoeffVector project_initial(const ProblemDef& p, const ModeSet& ms,
                            const std::vector<ICSpec>& ics) {
  if (static_cast<int>(ics.size()) != p.fields())
    throw std::invalid_argument("expected one initial condition per field");
  CoeffVector c(ms, p.fields());
  for (int f = 0; f < p.fields(); ++f) {
    for (const auto& term : ics[static_cast<size_t>(f)].terms) {
      const Mode j = term.wavevec;
      const Mode mj{-j.jx, -j.jy};
      const int ij = ms.index_of(j);
      const int imj = ms.index_of(mj);
      if (ij < 0 || imj < 0)
        throw std::invalid_argument(
            "initial-condition wavevector " + to_string(j) +
            " lies outside truncation J=" + std::to_string(ms.truncation()));
      if (term.is_sin) {
        c.at(f, ij) += cplx(0.0, -0.5) * term.amplitude;
        c.at(f, imj) += cplx(0.0, 0.5) * term.amplitude;
      } else {
        c.at(f, ij) += cplx(0.5, 0.0) * term.amplitude;
        c.at(f, imj) += cplx(0.5, 0.0) * term.amplitude;
      }
    }
  }
  return c;
}

namespace {
std::vector<cplx> to_std(const VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}
void check_same_modes(const CoeffVector& a, const CoeffVector& b) {
  if (!(a.modes == b.modes) || a.fields != b.fields)
    throw std::invalid_argument("mode-set mismatch between operands");
}
}  // namespace

CoeffVector burgers_nonlinear(const CoeffVector& a, const CoeffVector& b) {
  check_same_modes(a, b);
  if (a.modes.dimension() != 1 || a.fields != 1)
    throw std::invalid_argument("advection convolution expects one 1-D field");
  auto out = burgers_nonlinear_t<cplx>(a.modes, to_std(a.values),
                                       to_std(b.values));
  CoeffVector r(a.modes, 1);
  for (int i = 0; i < r.size(); ++i) r.values[i] = out[static_cast<size_t>(i)];
  return r;
}

CoeffVector mhd_nonlinear(const CoeffVector& a, const CoeffVector& b) {
  check_same_modes(a, b);
  if (a.modes.dimension() != 2 || a.fields != 2)
    throw std::invalid_argument(
        "bracket convolution expects two fields on a 2-D mode set");
  auto out =
      mhd_nonlinear_t<cplx>(a.modes, to_std(a.values), to_std(b.values));
  CoeffVector r(a.modes, 2);
  for (int i = 0; i < r.size(); ++i) r.values[i] = out[static_cast<size_t>(i)];
  return r;
}

}  // namespace homlind
