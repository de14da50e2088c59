#pragma once

#include <functional>
#include <vector>

#include "homlind/common.hpp"
#include "homlind/expsum.hpp"

namespace homlind {

// Adaptive Gauss-Legendre integration (20-point panels, bisection) to the
// requested absolute tolerance.  Throws on non-convergence.
cplx integrate_adaptive(const std::function<cplx(double)>& f, double a,
                        double b, double abs_tol = 1e-11);

// Variation-of-constants integral for the diagonal system y' = My + f(t),
// y(0) = 0: returns the vector of integrals int_0^T exp(M_ee (T-s)) f_e(s) ds
// evaluated by adaptive quadrature.  Reference oracle for the closed-form
// mode solver, including the resonant case.
VectorXcd duhamel_quadrature(const VectorXcd& M_diag,
                             const std::vector<ExpSum>& f, double T,
                             double abs_tol = 1e-11);

}  // namespace homlind
