#include "homlind/readout.hpp"

#include <cmath>
#include <stdexcept>

namespace homlind {

MatrixXcd read_block(const DensityState& st) { return st.r01; }

MatrixXcd read_block_via_paulis(const MatrixXcd& rho_full) {
  if (rho_full.rows() != rho_full.cols() || rho_full.rows() % 2 != 0)
    throw std::invalid_argument("expected a square matrix of even size");
  const int D = static_cast<int>(rho_full.rows()) / 2;
  const MatrixXcd I = MatrixXcd::Identity(D, D);
  MatrixXcd X = MatrixXcd::Zero(2 * D, 2 * D);
  X.topRightCorner(D, D) = I;
  X.bottomLeftCorner(D, D) = I;
  MatrixXcd Y = MatrixXcd::Zero(2 * D, 2 * D);
  Y.topRightCorner(D, D) = cplx(0.0, -1.0) * I;
  Y.bottomLeftCorner(D, D) = cplx(0.0, 1.0) * I;
  // Partial trace over the ancilla of (P (x) I) rho: sum of diagonal
  // D x D blocks.
  auto tra = [D](const MatrixXcd& M) {
    return (M.topLeftCorner(D, D) + M.bottomRightCorner(D, D)).eval();
  };
  const MatrixXcd tx = tra(X * rho_full);
  const MatrixXcd ty = tra(Y * rho_full);
  return 0.5 * (tx - cplx(0.0, 1.0) * ty);
}

cplx readout_component(const DensityState& st, const VectorXcd& y0hat,
                       int j) {
  const int D = st.D();
  if (y0hat.size() != D)
    throw std::invalid_argument("reference vector has wrong length");
  if (j < 0 || j >= D) throw std::out_of_range("component index out of range");
  if (std::abs(y0hat.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("reference vector must be normalized");

  VectorXcd ej = VectorXcd::Zero(D);
  ej[j] = 1.0;
  const MatrixXcd OR = y0hat * ej.adjoint() + ej * y0hat.adjoint();
  const MatrixXcd OI = cplx(0.0, -1.0) * y0hat * ej.adjoint() +
                       cplx(0.0, 1.0) * ej * y0hat.adjoint();

  const MatrixXcd rho = st.full();
  MatrixXcd X2 = MatrixXcd::Zero(2, 2), Y2 = MatrixXcd::Zero(2, 2);
  X2(0, 1) = 1.0;
  X2(1, 0) = 1.0;
  Y2(0, 1) = cplx(0.0, -1.0);
  Y2(1, 0) = cplx(0.0, 1.0);
  auto kron2 = [D](const MatrixXcd& P, const MatrixXcd& O) {
    MatrixXcd M = MatrixXcd::Zero(2 * D, 2 * D);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (P(a, b) != 0.0) M.block(a * D, b * D, D, D) = P(a, b) * O;
    return M;
  };
  const cplx t1 = (kron2(X2, OR) * rho).trace();
  const cplx t2 = (kron2(X2, OI) * rho).trace();
  const cplx t3 = (kron2(Y2, OR) * rho).trace();
  const cplx t4 = (kron2(Y2, OI) * rho).trace();
  return 0.5 * (t1 + cplx(0.0, 1.0) * t2 - cplx(0.0, 1.0) * t3 + t4);
}

VectorXcd readout_direct(const DensityState& st, const VectorXcd& y0hat) {
  if (y0hat.size() != st.D())
    throw std::invalid_argument("reference vector has wrong length");
  return 2.0 * (st.r01 * y0hat);
}

VectorXcd recover(const VectorXcd& y_tilde, double gamma, double T,
                  double y0_norm) {
  const double exponent = gamma * T;
  if (exponent > 700.0)
    throw std::runtime_error(
        "shift rescaling exp(" + std::to_string(exponent) +
        ") would overflow: shift too large for this horizon");
  return std::exp(exponent) * y0_norm * y_tilde;
}

}  // namespace homlind
