#pragma once

#include "homlind/grid.hpp"
#include "homlind/icspec.hpp"

namespace homlind {

struct FdmOptions {
    int nx = 256;       // number of periodic grid nodes (power of two >= 64)
    double dt = 1e-4;   // reference time step for the classical RK4 march
};

// Finite-difference reference integrator for the viscous Burgers equation
//   u_t + (u^2/2)_x = nu * u_xx    on [0, 2*pi) periodic.
// Second-order central differences (conservative advective flux), classical
// fourth-order Runge-Kutta in time.  Throws std::runtime_error on a CFL
// violation (time step too large for the requested grid).
GridSolution1D fdm_burgers(const ICSpec& u0, double nu, double time_final,
                           const FdmOptions& opt = {});

}  // namespace homlind
