#pragma once

#include "homlind/common.hpp"

namespace homlind {

struct HermitianEig {
  VectorXd eigenvalues;  // ascending
  MatrixXcd eigenvectors;
};

// Eigendecomposition of a Hermitian matrix (divide-and-conquer LAPACK
// driver when available, Eigen otherwise).
HermitianEig hermitian_eig(const MatrixXcd& A);

// Principal square root of a Hermitian PSD matrix.  Eigenvalues in
// [-clamp_factor * lambda_max, 0) are clamped to zero; anything more
// negative is an error.
MatrixXcd sqrtm_psd(const MatrixXcd& A, double clamp_factor = 1e-12);

// Dense matrix exponential (scaling-and-squaring with Pade approximants).
MatrixXcd expm(const MatrixXcd& A);

}  // namespace homlind
