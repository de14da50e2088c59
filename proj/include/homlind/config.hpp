#pragma once

#include <string>
#include <vector>

#include "homlind/icspec.hpp"
#include "homlind/problem.hpp"

namespace homlind {

enum class EngineMode { LindbladFull, LindbladKraus, LindbladStinespring, ClassicalExpm };

std::string to_string(EngineMode mode);
EngineMode parse_engine_mode(const std::string& text);

// Flat configuration of one pipeline run.  Parsed from `key = value` lines
// (# comments allowed) or assembled from the built-in presets; command-line
// flags mirror the same keys.
struct RunConfig {
    ProblemKind problem = ProblemKind::Burgers;
    double nu = 0.05;          // key: nu
    double eta = 0.03;         // key: eta (second field only)
    int truncation = 4;        // key: truncation  (mode cutoff J)
    int m_tilde = 4;           // key: m_tilde     (series truncation)
    double mu = -1.0;          // key: mu          (convergence control)
    double dt = 0.05;          // key: dt
    int steps = 10;            // key: steps
    EngineMode engine = EngineMode::LindbladFull;  // key: engine
    bool reference = true;     // key: reference   (compute metrics)
    std::string out_dir;       // key: out_dir     (empty: no files)
    unsigned long seed = 20240501;  // key: seed    (randomized checks)
    double gamma_margin = 0.0; // key: gamma_margin (surplus scalar shift)
    std::string ic_u = "sin(x)";                       // key: ic_u
    std::string ic_omega = "sin(x) + 0.5*sin(x-y)";    // key: ic_omega
    std::string ic_xi = "cos(y) + 0.25*cos(x+y)";      // key: ic_xi
    int fdm_nx = 256;          // key: fdm_nx
    double fdm_dt = 1e-4;      // key: fdm_dt
    int psm_nx = 64;           // key: psm_nx
    int psm_ny = 64;           // key: psm_ny
    double psm_dt = 1e-3;      // key: psm_dt

    double total_time() const { return dt * steps; }
    void validate() const;                 // throws std::invalid_argument
    ProblemDef problem_def() const;
    // One parsed harmonic spec per field (u, or omega then xi).
    std::vector<ICSpec> parse_ics() const;
};

// Built-in presets "burgers-paper" and "mhd-paper".
RunConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

// Apply one `key`, `value` pair; unknown keys or unparsable values throw.
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

// Parse `key = value` text (one entry per line, # comments, blank lines).
RunConfig parse_config_text(const std::string& text,
                            const RunConfig& base = RunConfig{});
RunConfig parse_config_file(const std::string& path,
                            const RunConfig& base = RunConfig{});

// Round-trippable flat text form (same key set the parser accepts).
std::string config_to_text(const RunConfig& config);

}  // namespace homlind
