#pragma once

#include "homlind/common.hpp"

namespace homlind {

// Hermitian/anti-Hermitian splitting of a generator A with scalar shift:
//   A1 = -(A + A*)/2,  A2 = -(A - A*)/(2i),
//   gamma = max(0, -lambda_min(A1)) + margin,  At = A - gamma I,
//   A1t = A1 + gamma I  (positive semidefinite),  S = sqrt(2 A1t).
// The doubled (ancilla x system) Hamiltonian and jump operator place A2
// and S in the upper-left block and are zero elsewhere.
struct LindbladEmbedding {
  int D = 0;
  MatrixXcd Atilde;   // shifted generator, = -A1t - i A2
  MatrixXcd A1t;      // Hermitian PSD
  MatrixXcd A2;       // Hermitian
  double gamma = 0.0;
  MatrixXcd sqrt2A1;  // Hermitian square root S

  MatrixXcd hamiltonian() const;   // 2D x 2D
  MatrixXcd jump_operator() const;  // 2D x 2D
};

// extra_shift adds a deliberate surplus to gamma (the recovery rescaling
// must cancel it exactly; used by the shift-covariance checks).
LindbladEmbedding split_and_shift(const MatrixXcd& A, double extra_shift = 0.0);

// Density matrix on the doubled space, stored by ancilla sector.  The
// Lindblad generator of this embedding never mixes sectors, so the blocks
// evolve independently and rho10 stays the adjoint of rho01.
struct DensityState {
  MatrixXcd r00, r01, r11;

  int D() const { return static_cast<int>(r00.rows()); }
  MatrixXcd full() const;  // assemble the 2D x 2D matrix
  static DensityState from_full(const MatrixXcd& rho);

  double trace() const;
  double min_eigenvalue() const;        // of the full density matrix
  double hermiticity_defect() const;    // max |rho - rho*|
};

// rho(0) = |+><+| (x) |y0hat><y0hat| with y0hat = y0/||y0||.
DensityState init_density(const VectorXcd& y0);

}  // namespace homlind
