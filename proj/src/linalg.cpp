#include "homlind/linalg.hpp"

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#ifdef HOMLIND_HAVE_LAPACKE
#include <complex>
#define lapack_complex_double std::complex<double>
#define lapack_complex_float std::complex<float>
#include <lapacke.h>
#endif

namespace homlind {

HermitianEig hermitian_eig(const MatrixXcd& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("eigendecomposition expects a square matrix");
  const auto n = A.rows();
  HermitianEig out;
#ifdef HOMLIND_HAVE_LAPACKE
  {
    MatrixXcd work = A;  // column-major; LAPACK overwrites with eigenvectors
    VectorXd w(n);
    const lapack_int info = LAPACKE_zheevd(
        LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n), work.data(),
        static_cast<lapack_int>(n), w.data());
    if (info == 0) {
      out.eigenvalues = std::move(w);
      out.eigenvectors = std::move(work);
      return out;
    }
  }
#endif
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("Hermitian eigendecomposition failed");
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  return out;
}

MatrixXcd sqrtm_psd(const MatrixXcd& A, double clamp_factor) {
  HermitianEig eig = hermitian_eig(A);
  const double lam_max = eig.eigenvalues.size()
                             ? std::max(0.0, eig.eigenvalues.maxCoeff())
                             : 0.0;
  const double floor = -clamp_factor * std::max(lam_max, 1.0);
  VectorXd lam = eig.eigenvalues;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] < floor)
      throw std::runtime_error(
          "matrix square root: eigenvalue " + std::to_string(lam[i]) +
          " is negative beyond the clamping tolerance");
    lam[i] = std::sqrt(std::max(lam[i], 0.0));
  }
  return eig.eigenvectors * lam.asDiagonal() *
         eig.eigenvectors.adjoint();
}

MatrixXcd expm(const MatrixXcd& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("matrix exponential expects a square matrix");
  if (!A.allFinite())
    throw std::invalid_argument("matrix exponential: non-finite entries");
  return A.exp();
}

}  // namespace homlind
