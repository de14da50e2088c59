#pragma once

#include "homlind/grid.hpp"
#include "homlind/problem.hpp"

namespace homlind {

// Error metrics between an approximate and a reference grid solution.  All
// scalar metrics are expressed in percent.  The signed difference field
// (approx - reference) is kept for plotting.
struct ErrorReport1D {
    double rms = 0.0;      // sqrt(mean(diff^2)) * 100
    double rel_l2 = 0.0;   // sqrt(sum(diff^2)/sum(ref^2)) * 100
    VectorXd diff;         // signed pointwise deviation
};

struct ErrorReport2D {
    double rms_omega = 0.0;
    double rms_xi = 0.0;
    double rel_l2_omega = 0.0;
    double rel_l2_xi = 0.0;
    double combined_rel_l2 = 0.0;  // both fields pooled in one quotient
    MatrixXd diff_omega;
    MatrixXd diff_xi;
};

// Evaluate a 1-D spectral coefficient vector on a uniform periodic grid:
// u(x_i) = Re sum_j c_j e^(i j x_i).  The largest imaginary residue of the
// sum is recorded in the result as a conjugate-symmetry diagnostic.
GridSolution1D evaluate_on_grid(const CoeffVector& coeffs, int nx, double time);

// Evaluate a two-field 2-D spectral coefficient vector on a uniform
// periodic grid (field 0 -> omega, field 1 -> xi).
GridSolution2D evaluate_on_grid(const CoeffVector& coeffs, int nx, int ny,
                                double time);

// Metrics require both solutions to live on the same grid.
ErrorReport1D error_metrics(const GridSolution1D& approx,
                            const GridSolution1D& reference);
ErrorReport2D error_metrics(const GridSolution2D& approx,
                            const GridSolution2D& reference);

}  // namespace homlind
