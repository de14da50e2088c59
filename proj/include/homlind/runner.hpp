#pragma once

#include <map>
#include <string>
#include <vector>

#include "homlind/channel.hpp"
#include "homlind/config.hpp"
#include "homlind/grid.hpp"
#include "homlind/lift.hpp"
#include "homlind/metrics.hpp"

namespace homlind {

// Everything one pipeline execution produces: the recovered solution,
// cross-checks, per-step diagnostics, references, metrics, and timings.
struct RunReport {
    RunConfig config;

    int lifted_dim = 0;
    double gamma = 0.0;
    double y0_norm = 0.0;
    std::vector<BlockSlice> layout;

    VectorXcd y_engine;   // lifted state at T recovered by the engine
    VectorXcd y_oracle;   // exp(A T) y0 cross-check
    double end_to_end_rel_error = 0.0;

    std::vector<CoeffVector> orders;  // recovered coefficients per order
    CoeffVector total;                // exact sum of the orders

    std::vector<StepDiagnostics> diagnostics;  // empty for classical-expm

    bool has_reference = false;
    GridSolution1D lham_1d, ref_1d;   // Burgers comparison pair
    ErrorReport1D err_1d;
    GridSolution2D lham_2d, ref_2d;   // reduced-MHD comparison pair
    ErrorReport2D err_2d;

    std::map<std::string, double> timings_sec;
};

// Full pipeline in the configured engine mode.  Any lindblad-* engine also
// computes the classical exponential solution and fails (std::runtime_error)
// if the recovered state disagrees beyond 1e-8 relative error.  Writes
// report files when config.out_dir is set.
RunReport run(const RunConfig& config);

// Error table behind the convergence figures: partial sums for every
// m_tilde in 0..m_tilde_max measured against one shared reference.
struct SweepResult {
    RunReport report;                        // pipeline run at m_tilde_max
    std::vector<CoeffVector> partial_sums;   // index = m_tilde
    std::vector<ErrorReport1D> per_order_1d; // Burgers rows
    std::vector<ErrorReport2D> per_order_2d; // reduced-MHD rows
};

SweepResult sweep_orders(const RunConfig& config, int m_tilde_max);

// Problem/mode-set/initial-condition wiring shared by run, dump-system,
// and the test drivers.
LiftedSystem build_system_for(const RunConfig& config);

}  // namespace homlind
