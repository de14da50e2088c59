#pragma once

#include "homlind/embedding.hpp"

namespace homlind {

// Upper-right ancilla block (<0| (x) I) rho (|1> (x) I).
MatrixXcd read_block(const DensityState& st);
// Same block via ancilla Pauli expectations on the full matrix:
// 1/2 [Tr_a((X (x) I) rho) - i Tr_a((Y (x) I) rho)].
MatrixXcd read_block_via_paulis(const MatrixXcd& rho_full);

// Component j of the shifted solution through the four Hermitian
// observables built from |y0hat><j| + |j><y0hat| and its -i/+i partner;
// equals 2 <j| rho01 |y0hat>.
cplx readout_component(const DensityState& st, const VectorXcd& y0hat, int j);
// Direct extraction 2 rho01 y0hat for all components.
VectorXcd readout_direct(const DensityState& st, const VectorXcd& y0hat);

// Undo the scalar shift and the initial normalization:
// y(T) = exp(gamma T) * y0_norm * y_tilde.  Fails if gamma*T > 700 (the
// rescaling would overflow).
VectorXcd recover(const VectorXcd& y_tilde, double gamma, double T,
                  double y0_norm);

}  // namespace homlind
