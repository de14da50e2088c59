#pragma once

#include <string>

#include "homlind/grid.hpp"
#include "homlind/lift.hpp"

namespace homlind {

struct RunReport;
struct SweepResult;

// Shortest exact decimal form up to 17 significant digits (%.17g).
std::string format_float(double v);

void write_text_file(const std::string& path, const std::string& content);

// LiftedSystem as a JSON document: block layout, dense A in row-major
// order with complex entries as [re, im] pairs, and the initial vector.
std::string lifted_system_json(const LiftedSystem& sys);

// Full machine-readable run summary (config echo, recovered coefficients,
// cross-check errors, per-step diagnostics, metrics, timings).
std::string run_report_json(const RunReport& report);

// CSV renderings (deterministic: fixed headers, %.17g values).
std::string errors_vs_order_csv(const SweepResult& sweep);
std::string profile_csv(const SweepResult& sweep);           // Burgers, Fig-3 layout
std::string grid1d_csv(const GridSolution1D& sol);           // x, u rows
std::string grid2d_field_csv(const MatrixXd& field);         // x_index, y_index, value
std::string error_report_csv(const RunReport& report);       // one row per metric

// Write the full artifact set of a run (and optionally a sweep) into
// out_dir, creating the directory if needed.
void write_run_artifacts(const RunReport& report, const std::string& out_dir);
void write_sweep_artifacts(const SweepResult& sweep, const std::string& out_dir);

}  // namespace homlind
