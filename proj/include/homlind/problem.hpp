#pragma once

#include <stdexcept>
#include <vector>

#include "homlind/common.hpp"
#include "homlind/expsum.hpp"
#include "homlind/icspec.hpp"
#include "homlind/modes.hpp"

namespace homlind {

enum class ProblemKind { Burgers, ReducedMHD };

// Periodic [0, 2pi)^d problem with diffusive linear part.
struct ProblemDef {
  ProblemKind kind = ProblemKind::Burgers;
  double nu = 0.0;   // viscosity
  double eta = 0.0;  // resistivity (second field only)

  int fields() const { return kind == ProblemKind::Burgers ? 1 : 2; }
  int dimension() const { return kind == ProblemKind::Burgers ? 1 : 2; }
  ModeSet make_modes(int J) const {
    return dimension() == 1 ? ModeSet::box_1d(J) : ModeSet::box_2d(J);
  }
  void validate() const;
};

// Complex Fourier coefficients for one or more fields on a shared ModeSet.
// Entry layout is field-major: values[f * modes.size() + mode_index].
struct CoeffVector {
  ModeSet modes;
  int fields = 1;
  VectorXcd values;

  CoeffVector() : fields(0) {}  // empty placeholder
  CoeffVector(ModeSet ms, int nfields)
      : modes(std::move(ms)),
        fields(nfields),
        values(VectorXcd::Zero(static_cast<Eigen::Index>(nfields) *
                               modes.size())) {}

  int size() const { return static_cast<int>(values.size()); }
  cplx& at(int field, int mode_index) {
    return values[static_cast<Eigen::Index>(field) * modes.size() +
                  mode_index];
  }
  cplx at(int field, int mode_index) const {
    return values[static_cast<Eigen::Index>(field) * modes.size() +
                  mode_index];
  }
  // Maximum deviation from the real-field symmetry c_{-j} = conj(c_j).
  double conjugate_symmetry_defect() const;
};

// Non-negative decay rates sigma_e per (field, mode); the spectral linear
// operator is M = -diag(sigma).
VectorXd linear_rates(const ProblemDef& p, const ModeSet& ms);
// Dense diagonal M as a matrix (convenience for assembly and oracles).
MatrixXcd linear_matrix(const ProblemDef& p, const ModeSet& ms);

// Exact projection of a harmonic initial condition; one ICSpec per field.
CoeffVector project_initial(const ProblemDef& p, const ModeSet& ms,
                            const std::vector<ICSpec>& ics);

// Advection convolution N_j(a,b) = -sum_{p+q=j,|p|,|q|<=J} (i q) a_p b_q,
// generic over the coefficient scalar (complex numbers or ExpSum profiles).
template <typename T>
std::vector<T> burgers_nonlinear_t(const ModeSet& ms, const std::vector<T>& a,
                                   const std::vector<T>& b) {
  const int n = ms.size();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("coefficient length does not match mode set");
  std::vector<T> out(static_cast<size_t>(n));
  for (int ip = 0; ip < n; ++ip) {
    const int p = ms.at(ip).jx;
    for (int iq = 0; iq < n; ++iq) {
      const int q = ms.at(iq).jx;
      const int j = ms.index_of({p + q, 0});
      if (j < 0 || q == 0) continue;
      out[static_cast<size_t>(j)] +=
          (a[static_cast<size_t>(ip)] * b[static_cast<size_t>(iq)]) *
          cplx(0.0, -static_cast<double>(q));
    }
  }
  return out;
}

// Poisson-bracket convolutions of the vorticity/potential system with
// stream function phi_p = -omega_p/|p|^2 (phi_0 = 0) and current
// zeta_q = |q|^2 xi_q:
//   N^omega_j = sum K(p,q) (phi^a_p omega^b_q - xi^a_p zeta^b_q)
//   N^xi_j    = sum K(p,q)  phi^a_p xi^b_q
// with kernel K(p,q) = p_x q_y - p_y q_x.  Input/output layout: omega
// block then xi block.
template <typename T>
std::vector<T> mhd_nonlinear_t(const ModeSet& ms, const std::vector<T>& a,
                               const std::vector<T>& b) {
  const int n = ms.size();
  if (static_cast<int>(a.size()) != 2 * n || static_cast<int>(b.size()) != 2 * n)
    throw std::invalid_argument("coefficient length does not match mode set");
  std::vector<T> out(static_cast<size_t>(2 * n));
  for (int ip = 0; ip < n; ++ip) {
    const Mode p = ms.at(ip);
    const double p2 = static_cast<double>(p.jx) * p.jx +
                      static_cast<double>(p.jy) * p.jy;
    for (int iq = 0; iq < n; ++iq) {
      const Mode q = ms.at(iq);
      const double kern = static_cast<double>(p.jx) * q.jy -
                          static_cast<double>(p.jy) * q.jx;
      if (kern == 0.0) continue;
      const int j = ms.index_of({p.jx + q.jx, p.jy + q.jy});
      if (j < 0) continue;
      const double q2 = static_cast<double>(q.jx) * q.jx +
                        static_cast<double>(q.jy) * q.jy;
      const T& a_omega = a[static_cast<size_t>(ip)];
      const T& a_xi = a[static_cast<size_t>(n + ip)];
      const T& b_omega = b[static_cast<size_t>(iq)];
      const T& b_xi = b[static_cast<size_t>(n + iq)];
      if (p2 > 0.0) {
        T phi = a_omega * cplx(-1.0 / p2, 0.0);
        out[static_cast<size_t>(j)] += (phi * b_omega) * cplx(kern, 0.0);
        out[static_cast<size_t>(n + j)] += (phi * b_xi) * cplx(kern, 0.0);
      }
      out[static_cast<size_t>(j)] -=
          (a_xi * (b_xi * cplx(q2, 0.0))) * cplx(kern, 0.0);
    }
  }
  return out;
}

// Complex-valued wrappers with mode-set checking.
CoeffVector burgers_nonlinear(const CoeffVector& a, const CoeffVector& b);
CoeffVector mhd_nonlinear(const CoeffVector& a, const CoeffVector& b);
// Dispatch on problem kind (generic scalar).
template <typename T>
std::vector<T> nonlinear_t(const ProblemDef& p, const ModeSet& ms,
                           const std::vector<T>& a, const std::vector<T>& b) {
  return p.kind == ProblemKind::Burgers ? burgers_nonlinear_t(ms, a, b)
                                        : mhd_nonlinear_t(ms, a, b);
}

}  // namespace homlind
