#include "homlind/runner.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "homlind/embedding.hpp"
#include "homlind/fdm.hpp"
#include "homlind/io.hpp"
#include "homlind/psm.hpp"
#include "homlind/readout.hpp"

namespace homlind {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Realization realization_of(EngineMode mode) {
    switch (mode) {
        case EngineMode::LindbladFull: return Realization::Superop;
        case EngineMode::LindbladKraus: return Realization::Kraus;
        case EngineMode::LindbladStinespring: return Realization::Stinespring;
        case EngineMode::ClassicalExpm: break;
    }
    throw std::logic_error("classical-expm has no channel realization");
}

void attach_reference(RunReport& report) {
    const RunConfig& cfg = report.config;
    const double T = cfg.total_time();
    const auto ics = cfg.parse_ics();
    auto t0 = Clock::now();
    if (cfg.problem == ProblemKind::Burgers) {
        FdmOptions opt;
        opt.nx = cfg.fdm_nx;
        opt.dt = cfg.fdm_dt;
        report.ref_1d = fdm_burgers(ics[0], cfg.nu, T, opt);
        report.timings_sec["reference"] = seconds_since(t0);
        t0 = Clock::now();
        report.lham_1d = evaluate_on_grid(report.total, cfg.fdm_nx, T);
        report.err_1d = error_metrics(report.lham_1d, report.ref_1d);
        report.timings_sec["metrics"] = seconds_since(t0);
    } else {
        PsmOptions opt;
        opt.nx = cfg.psm_nx;
        opt.ny = cfg.psm_ny;
        opt.dt = cfg.psm_dt;
        report.ref_2d = psm_mhd(ics[0], ics[1], cfg.nu, cfg.eta, T, opt);
        report.timings_sec["reference"] = seconds_since(t0);
        t0 = Clock::now();
        report.lham_2d = evaluate_on_grid(report.total, cfg.psm_nx, cfg.psm_ny, T);
        report.err_2d = error_metrics(report.lham_2d, report.ref_2d);
        report.timings_sec["metrics"] = seconds_since(t0);
    }
    report.has_reference = true;
}

}  // namespace

LiftedSystem build_system_for(const RunConfig& config) {
    config.validate();
    const ProblemDef problem = config.problem_def();
    const ModeSet ms = problem.make_modes(config.truncation);
    const CoeffVector c0 = project_initial(problem, ms, config.parse_ics());
    const HamConfig hcfg{config.m_tilde, config.mu};
    return build_lifted_system(problem, ms, c0, hcfg);
}

RunReport run(const RunConfig& config) {
    config.validate();
    const auto t_total = Clock::now();

    RunReport report;
    report.config = config;
    const ProblemDef problem = config.problem_def();
    const ModeSet ms = problem.make_modes(config.truncation);

    auto t0 = Clock::now();
    LiftedSystem sys = build_system_for(config);
    report.timings_sec["lift"] = seconds_since(t0);
    report.lifted_dim = sys.dim();
    report.y0_norm = sys.y0_norm;
    report.layout = sys.layout;

    const double T = config.total_time();

    t0 = Clock::now();
    report.y_oracle = classical_solution(sys, T);
    report.timings_sec["oracle_expm"] = seconds_since(t0);

    if (config.engine == EngineMode::ClassicalExpm || sys.y0_norm == 0.0) {
        // A zero initial vector leaves nothing to embed; the linear system
        // answer (identically zero) is already exact.
        report.y_engine = report.y_oracle;
        report.gamma = 0.0;
        report.end_to_end_rel_error = 0.0;
    } else {
        t0 = Clock::now();
        const LindbladEmbedding emb = split_and_shift(sys.A, config.gamma_margin);
        report.gamma = emb.gamma;
        report.timings_sec["embedding"] = seconds_since(t0);

        t0 = Clock::now();
        StepChannel channel = build_channel(emb, config.dt);
        const Realization realization = realization_of(config.engine);
        if (realization == Realization::Stinespring) build_stinespring(channel);
        report.timings_sec["channel_build"] = seconds_since(t0);

        t0 = Clock::now();
        DensityState state = init_density(sys.y0);
        state = evolve(channel, state, config.steps, realization, &report.diagnostics);
        report.timings_sec["evolve"] = seconds_since(t0);

        t0 = Clock::now();
        const VectorXcd y0hat = sys.y0 / sys.y0_norm;
        const VectorXcd y_tilde = readout_direct(state, y0hat);
        report.y_engine = recover(y_tilde, emb.gamma, T, sys.y0_norm);
        report.timings_sec["readout"] = seconds_since(t0);

        const double oracle_norm = report.y_oracle.norm();
        report.end_to_end_rel_error =
            (oracle_norm > 0.0)
                ? (report.y_engine - report.y_oracle).norm() / oracle_norm
                : (report.y_engine).norm();
        if (!(report.end_to_end_rel_error <= 1e-8)) {
            throw std::runtime_error(
                "engine/oracle mismatch: relative error " +
                format_float(report.end_to_end_rel_error) +
                " exceeds 1e-8 in mode " + to_string(config.engine));
        }
    }

    const auto slices = split_orders(sys, report.y_engine);
    report.orders.reserve(slices.size());
    CoeffVector total(ms, problem.fields());
    for (size_t m = 0; m < slices.size(); ++m) {
        CoeffVector cv(ms, problem.fields());
        cv.values = slices[m];
        total.values += cv.values;
        report.orders.push_back(std::move(cv));
    }
    report.total = std::move(total);

    if (config.reference) attach_reference(report);

    report.timings_sec["total"] = seconds_since(t_total);
    if (!config.out_dir.empty()) write_run_artifacts(report, config.out_dir);
    return report;
}

SweepResult sweep_orders(const RunConfig& config, int m_tilde_max) {
    if (m_tilde_max < 0) {
        throw std::invalid_argument("sweep_orders: m_tilde_max must be >= 0");
    }
    RunConfig inner = config;
    inner.m_tilde = m_tilde_max;
    inner.reference = true;  // the sweep's whole point is the error table
    inner.out_dir.clear();   // artifacts written once, below

    SweepResult sweep{run(inner), {}, {}, {}};
    sweep.report.config.out_dir = config.out_dir;  // accurate artifact echo
    const RunReport& rep = sweep.report;

    // Partial sums share the per-order solutions: order m is independent of
    // the series truncation, so one run at the largest order supplies every
    // row against the single shared reference.
    const ProblemDef problem = inner.problem_def();
    const ModeSet ms = problem.make_modes(inner.truncation);
    CoeffVector running(ms, problem.fields());
    for (int m = 0; m <= m_tilde_max; ++m) {
        running.values += rep.orders[static_cast<size_t>(m)].values;
        sweep.partial_sums.push_back(running);
        if (inner.problem == ProblemKind::Burgers) {
            const auto lham =
                evaluate_on_grid(running, inner.fdm_nx, inner.total_time());
            sweep.per_order_1d.push_back(error_metrics(lham, rep.ref_1d));
        } else {
            const auto lham = evaluate_on_grid(running, inner.psm_nx, inner.psm_ny,
                                               inner.total_time());
            sweep.per_order_2d.push_back(error_metrics(lham, rep.ref_2d));
        }
    }

    if (!config.out_dir.empty()) write_sweep_artifacts(sweep, config.out_dir);
    return sweep;
}

}  // namespace homlind
