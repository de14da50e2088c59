#include "homlind/embedding.hpp"

#include <stdexcept>

#include "homlind/linalg.hpp"

namespace homlind {

MatrixXcd LindbladEmbedding::hamiltonian() const {
  MatrixXcd H = MatrixXcd::Zero(2 * D, 2 * D);
  H.topLeftCorner(D, D) = A2;
  return H;
}

MatrixXcd LindbladEmbedding::jump_operator() const {
  MatrixXcd F = MatrixXcd::Zero(2 * D, 2 * D);
  F.topLeftCorner(D, D) = sqrt2A1;
  return F;
}

LindbladEmbedding split_and_shift(const MatrixXcd& A, double extra_shift) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("generator must be square");
  LindbladEmbedding emb;
  emb.D = static_cast<int>(A.rows());
  const MatrixXcd A1 = -(A + A.adjoint()) / 2.0;
  emb.A2 = (A - A.adjoint()) * cplx(0.0, 0.5);  // -(A - A*)/(2i)
  const double lam_min = hermitian_eig(A1).eigenvalues.minCoeff();
  emb.gamma =
      std::max(0.0, -lam_min) + 1e-12 * A.norm() + extra_shift;
  emb.Atilde = A - emb.gamma * MatrixXcd::Identity(emb.D, emb.D);
  emb.A1t = A1 + emb.gamma * MatrixXcd::Identity(emb.D, emb.D);
  emb.sqrt2A1 = sqrtm_psd(2.0 * emb.A1t);
  return emb;
}

MatrixXcd DensityState::full() const {
  const int n = D();
  MatrixXcd rho(2 * n, 2 * n);
  rho.topLeftCorner(n, n) = r00;
  rho.topRightCorner(n, n) = r01;
  rho.bottomLeftCorner(n, n) = r01.adjoint();
  rho.bottomRightCorner(n, n) = r11;
  return rho;
}

DensityState DensityState::from_full(const MatrixXcd& rho) {
  if (rho.rows() != rho.cols() || rho.rows() % 2 != 0)
    throw std::invalid_argument("density matrix must be square of even size");
  const int n = static_cast<int>(rho.rows()) / 2;
  DensityState st;
  st.r00 = rho.topLeftCorner(n, n);
  st.r01 = rho.topRightCorner(n, n);
  st.r11 = rho.bottomRightCorner(n, n);
  return st;
}

double DensityState::trace() const {
  return (r00.trace() + r11.trace()).real();
}

double DensityState::min_eigenvalue() const {
  return hermitian_eig(full()).eigenvalues.minCoeff();
}

double DensityState::hermiticity_defect() const {
  const MatrixXcd rho = full();
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

DensityState init_density(const VectorXcd& y0) {
  const double norm = y0.norm();
  if (norm == 0.0)
    throw std::invalid_argument("initial vector must be nonzero");
  const VectorXcd yhat = y0 / norm;
  const MatrixXcd P = yhat * yhat.adjoint();
  DensityState st;
  st.r00 = 0.5 * P;
  st.r01 = 0.5 * P;
  st.r11 = 0.5 * P;
  return st;
}

}  // namespace homlind
