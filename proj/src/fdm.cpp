#include "homlind/fdm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homlind {

namespace {

// Semi-discrete right-hand side: central diffusion plus the conservative
// central flux for (u^2/2)_x on a periodic grid with spacing h.
void burgers_rhs(const VectorXd& u, double nu, double h, VectorXd& out) {
    const int n = static_cast<int>(u.size());
    const double inv_h2 = 1.0 / (h * h);
    const double inv_4h = 1.0 / (4.0 * h);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        const double diff = nu * (u[ip] - 2.0 * u[i] + u[im]) * inv_h2;
        const double adv = (u[ip] * u[ip] - u[im] * u[im]) * inv_4h;
        out[i] = diff - adv;
    }
}

}  // namespace

GridSolution1D fdm_burgers(const ICSpec& u0, double nu, double time_final,
                           const FdmOptions& opt) {
    if (!(nu > 0.0)) {
        throw std::invalid_argument("fdm_burgers: viscosity must be positive");
    }
    if (!(time_final >= 0.0)) {
        throw std::invalid_argument("fdm_burgers: final time must be non-negative");
    }
    validate_grid_size(opt.nx, "fdm_burgers: nx");
    if (!(opt.dt > 0.0)) {
        throw std::invalid_argument("fdm_burgers: dt must be positive");
    }

    const int n = opt.nx;
    const double h = 2.0 * std::numbers::pi / n;

    GridSolution1D sol;
    sol.x = VectorXd::Zero(n);
    sol.u = VectorXd::Zero(n);
    sol.time = time_final;
    double umax = 0.0;
    for (int i = 0; i < n; ++i) {
        sol.x[i] = h * i;
        sol.u[i] = u0.eval(sol.x[i]);
        umax = std::max(umax, std::abs(sol.u[i]));
    }
    if (time_final == 0.0) return sol;

    // Stability of classical RK4: the diffusion spectrum reaches -4*nu/h^2 on
    // the negative real axis (limit ~2.785) and the linearised advection
    // spectrum reaches |u|max/h on the imaginary axis (limit ~2.828).  The
    // maximum principle keeps |u| below its initial bound, so the initial
    // data give a valid advective speed estimate.
    const double diffusion_scale = opt.dt * 4.0 * nu / (h * h);
    const double advection_scale = opt.dt * umax / h;
    if (diffusion_scale > 2.785 || advection_scale > 2.828) {
        throw std::runtime_error(
            "fdm_burgers: CFL violation: dt=" + std::to_string(opt.dt) +
            " too large for nx=" + std::to_string(n) +
            " (diffusion scale " + std::to_string(diffusion_scale) +
            ", advection scale " + std::to_string(advection_scale) + ")");
    }

    const long nsteps = std::max<long>(1, std::lround(time_final / opt.dt));
    const double dt = time_final / static_cast<double>(nsteps);

    VectorXd k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long step = 0; step < nsteps; ++step) {
        burgers_rhs(sol.u, nu, h, k1);
        tmp = sol.u + 0.5 * dt * k1;
        burgers_rhs(tmp, nu, h, k2);
        tmp = sol.u + 0.5 * dt * k2;
        burgers_rhs(tmp, nu, h, k3);
        tmp = sol.u + dt * k3;
        burgers_rhs(tmp, nu, h, k4);
        sol.u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!sol.u.allFinite()) {
        throw std::runtime_error("fdm_burgers: non-finite field values after time march");
    }
    return sol;
}

}  // namespace homlind
