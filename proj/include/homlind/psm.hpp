#pragma once

#include "homlind/grid.hpp"
#include "homlind/icspec.hpp"

namespace homlind {

struct PsmOptions {
    int nx = 64;        // grid nodes per direction (powers of two >= 64)
    int ny = 64;
    double dt = 1e-3;   // reference time step for the classical RK4 march
    bool nonlinear_enabled = true;  // false -> pure mode-wise diffusion
};

// Pseudo-spectral reference integrator for the 2-D reduced-MHD system
//   omega_t + {phi, omega} = {xi, zeta} + nu  * Lap(omega)
//   xi_t    + {phi, xi}    =              eta * Lap(xi)
// with phi = InvLap(omega) (zero-mode gauge phi_hat(0) = 0) and
// zeta = -Lap(xi), on [0, 2*pi)^2 periodic.  Fourier collocation with
// two-thirds-rule dealiasing, Poisson brackets evaluated pointwise on the
// grid, classical fourth-order Runge-Kutta in time.  Throws
// std::runtime_error when the spectral field norm blows up (instability).
GridSolution2D psm_mhd(const ICSpec& omega0, const ICSpec& xi0, double nu,
                       double eta, double time_final, const PsmOptions& opt = {});

}  // namespace homlind
