#include "homlind/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace homlind {

GridSolution1D evaluate_on_grid(const CoeffVector& coeffs, int nx, double time) {
    if (coeffs.modes.dimension() != 1) {
        throw std::invalid_argument(
            "evaluate_on_grid: 1-D overload requires a 1-D mode set");
    }
    if (coeffs.fields != 1) {
        throw std::invalid_argument(
            "evaluate_on_grid: 1-D overload requires a single field");
    }
    validate_grid_size(nx, "evaluate_on_grid: nx");

    GridSolution1D sol;
    sol.x = VectorXd::Zero(nx);
    sol.u = VectorXd::Zero(nx);
    sol.time = time;
    const int nmodes = static_cast<int>(coeffs.modes.size());
    double imag_max = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = 2.0 * std::numbers::pi * i / nx;
        sol.x[i] = x;
        cplx acc(0.0, 0.0);
        for (int m = 0; m < nmodes; ++m) {
            const Mode mode = coeffs.modes.at(m);
            acc += coeffs.at(0, m) * std::exp(cplx(0.0, mode.jx * x));
        }
        sol.u[i] = acc.real();
        imag_max = std::max(imag_max, std::abs(acc.imag()));
    }
    sol.imag_residual = imag_max;
    return sol;
}

GridSolution2D evaluate_on_grid(const CoeffVector& coeffs, int nx, int ny,
                                double time) {
    if (coeffs.modes.dimension() != 2) {
        throw std::invalid_argument(
            "evaluate_on_grid: 2-D overload requires a 2-D mode set");
    }
    if (coeffs.fields != 2) {
        throw std::invalid_argument(
            "evaluate_on_grid: 2-D overload requires exactly two fields");
    }
    validate_grid_size(nx, "evaluate_on_grid: nx");
    validate_grid_size(ny, "evaluate_on_grid: ny");

    GridSolution2D sol;
    sol.nx = nx;
    sol.ny = ny;
    sol.time = time;
    sol.omega = MatrixXd::Zero(nx, ny);
    sol.xi = MatrixXd::Zero(nx, ny);
    const int nmodes = static_cast<int>(coeffs.modes.size());
    double imag_max = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = 2.0 * std::numbers::pi * i / nx;
        for (int j = 0; j < ny; ++j) {
            const double y = 2.0 * std::numbers::pi * j / ny;
            cplx acc_w(0.0, 0.0);
            cplx acc_x(0.0, 0.0);
            for (int m = 0; m < nmodes; ++m) {
                const Mode mode = coeffs.modes.at(m);
                const cplx phase = std::exp(cplx(0.0, mode.jx * x + mode.jy * y));
                acc_w += coeffs.at(0, m) * phase;
                acc_x += coeffs.at(1, m) * phase;
            }
            sol.omega(i, j) = acc_w.real();
            sol.xi(i, j) = acc_x.real();
            imag_max = std::max(imag_max,
                                std::max(std::abs(acc_w.imag()), std::abs(acc_x.imag())));
        }
    }
    sol.imag_residual = imag_max;
    return sol;
}

ErrorReport1D error_metrics(const GridSolution1D& approx,
                            const GridSolution1D& reference) {
    if (approx.size() != reference.size()) {
        throw std::invalid_argument("error_metrics: grid size mismatch");
    }
    const int n = approx.size();
    if (n == 0) {
        throw std::invalid_argument("error_metrics: empty grids");
    }
    ErrorReport1D rep;
    rep.diff = approx.u - reference.u;
    const double sum_sq = rep.diff.squaredNorm();
    const double ref_sq = reference.u.squaredNorm();
    rep.rms = std::sqrt(sum_sq / n) * 100.0;
    rep.rel_l2 = (ref_sq > 0.0) ? std::sqrt(sum_sq / ref_sq) * 100.0
                                : (sum_sq > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    return rep;
}

ErrorReport2D error_metrics(const GridSolution2D& approx,
                            const GridSolution2D& reference) {
    if (approx.nx != reference.nx || approx.ny != reference.ny) {
        throw std::invalid_argument("error_metrics: grid size mismatch");
    }
    const double n = static_cast<double>(approx.nx) * approx.ny;
    if (n == 0) {
        throw std::invalid_argument("error_metrics: empty grids");
    }
    ErrorReport2D rep;
    rep.diff_omega = approx.omega - reference.omega;
    rep.diff_xi = approx.xi - reference.xi;
    const double dw_sq = rep.diff_omega.squaredNorm();
    const double dx_sq = rep.diff_xi.squaredNorm();
    const double rw_sq = reference.omega.squaredNorm();
    const double rx_sq = reference.xi.squaredNorm();
    auto rel = [](double dsq, double rsq) {
        if (rsq > 0.0) return std::sqrt(dsq / rsq) * 100.0;
        return dsq > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    };
    rep.rms_omega = std::sqrt(dw_sq / n) * 100.0;
    rep.rms_xi = std::sqrt(dx_sq / n) * 100.0;
    rep.rel_l2_omega = rel(dw_sq, rw_sq);
    rep.rel_l2_xi = rel(dx_sq, rx_sq);
    rep.combined_rel_l2 = rel(dw_sq + dx_sq, rw_sq + rx_sq);
    return rep;
}

}  // namespace homlind
