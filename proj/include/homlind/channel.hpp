#pragma once

#include <memory>
#include <vector>

#include "homlind/embedding.hpp"

namespace homlind {

enum class Realization { Superop, Kraus, Stinespring };

// Isometry V = sum_i K_i (x) |i>_E mapping the doubled space into
// (doubled space) (x) environment; rows are environment-major:
// V[s * rank + i, s'] = K_i[s, s'].
struct StinespringData {
  MatrixXcd V;
  int rank = 0;
  double isometry_residual = 0.0;  // max |V*V - I|
};

// One-step CPTP channel exp(L dt) of the sector-preserving Lindbladian.
// The generator never couples ancilla sectors, so the channel is stored
// and applied block-wise: the 00-sector superoperator, the 01-block
// propagator exp(At dt), and the untouched 11-sector.  Kraus operators
// are K_i = diag(K00_i, b_i I_D) from the channel's Choi matrix, whose
// support is the 00-sector pairs plus the maximally-entangled direction
// of the 11-sector (all other Choi eigenvalues vanish identically).
struct StepChannel {
  double dt = 0.0;
  int D = 0;
  MatrixXcd E00;   // D^2 x D^2, column-stacking convention
  MatrixXcd Eblk;  // D x D, exp(At dt)

  std::vector<MatrixXcd> kraus00;  // sqrt(eigenvalue) absorbed
  VectorXcd kraus_b;               // diagonal 11-block scalars b_i
  MatrixXcd Ehat;                  // sum_i conj(b_i) K00_i
  double r11_factor = 0.0;         // sum_i |b_i|^2

  double choi_min_eig = 0.0;
  double choi_max_eig = 0.0;
  double completeness_residual = 0.0;   // max |sum K*K - I|
  double trace_defect = 0.0;            // superoperator TP defect

  std::shared_ptr<const StinespringData> stine;  // set by build_stinespring

  int kraus_rank() const { return static_cast<int>(kraus00.size()); }
  // Full 2D x 2D Kraus operators.
  std::vector<MatrixXcd> kraus_full() const;
  // Full-space one-step superoperator assembled from the sector action
  // ((2D)^2 square; intended for small dimensions).
  MatrixXcd dense_superop() const;
};

StepChannel build_channel(const LindbladEmbedding& emb, double dt);

// Full-space Lindbladian superoperator
//   L = -i(I(x)H - H^T(x)I) + conj(F)(x)F - 1/2(I(x)F*F + (F*F)^T(x)I)
// in column-stacking convention, exponentiated over dt.  Dense
// (2D)^2-dimensional construction: independent cross-check path for
// small systems.
MatrixXcd dense_superop_from_embedding(const LindbladEmbedding& emb,
                                       double dt);

// Builds and attaches the dilation isometry; returns the attached data.
const StinespringData& build_stinespring(StepChannel& ch);

DensityState apply_step(const StepChannel& ch, const DensityState& st,
                        Realization mode);

struct StepDiagnostics {
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  double r01_norm = 0.0;
};

DensityState evolve(const StepChannel& ch, DensityState st, int nsteps,
                    Realization mode,
                    std::vector<StepDiagnostics>* diagnostics = nullptr);

// Column-stacking helpers.
VectorXcd vec(const MatrixXcd& M);
MatrixXcd unvec(const VectorXcd& v, int rows);

}  // namespace homlind
