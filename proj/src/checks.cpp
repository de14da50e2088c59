#include "homlind/checks.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "homlind/channel.hpp"
#include "homlind/duhamel.hpp"
#include "homlind/embedding.hpp"
#include "homlind/io.hpp"
#include "homlind/linalg.hpp"
#include "homlind/metrics.hpp"
#include "homlind/readout.hpp"
#include "homlind/runner.hpp"

namespace homlind {

namespace {

using Rng = std::mt19937_64;

cplx random_unit(Rng& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return {dist(rng), dist(rng)};
}

ExpSum random_expsum(Rng& rng, int nterms) {
    std::uniform_real_distribution<double> pos(0.05, 1.5);
    std::uniform_real_distribution<double> imag(-1.0, 1.0);
    std::uniform_int_distribution<int> pow_dist(0, 2);
    ExpSum s;
    for (int i = 0; i < nterms; ++i) {
        s += ExpSum(random_unit(rng), cplx(pos(rng), imag(rng)), pow_dist(rng));
    }
    return s;
}

MatrixXcd random_matrix(Rng& rng, int n) {
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = random_unit(rng);
    return m;
}

// Random stable generator: shifted to have a strictly negative Hermitian
// part so all embedding branches are exercised with decaying dynamics.
MatrixXcd random_stable_generator(Rng& rng, int n) {
    MatrixXcd m = 0.4 * random_matrix(rng, n);
    m -= (0.3 + 0.4 * m.norm()) * MatrixXcd::Identity(n, n);
    return m;
}

CoeffVector random_symmetric_coeffs(Rng& rng, const ModeSet& ms, int fields) {
    CoeffVector c(ms, fields);
    for (int f = 0; f < fields; ++f) {
        for (int i = 0; i < ms.size(); ++i) {
            const Mode mo = ms.at(i);
            const Mode neg{-mo.jx, -mo.jy};
            const int ni = ms.index_of(neg);
            if (ni < i) continue;  // fill each pair once from its first member
            const cplx v = random_unit(rng);
            c.at(f, i) = v;
            if (ni == i) {
                c.at(f, i) = cplx(v.real(), 0.0);  // self-conjugate mode
            } else {
                c.at(f, ni) = std::conj(v);
            }
        }
    }
    return c;
}

struct Suite {
    std::vector<CheckResult> results;

    void record(const std::string& name, double residual, double tol) {
        std::ostringstream detail;
        detail << "residual " << format_float(residual) << " (tolerance "
               << format_float(tol) << ")";
        results.push_back({name, residual <= tol, detail.str()});
    }
    void record_bool(const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
    }
    void record_error(const std::string& name, const std::string& what) {
        results.push_back({name, false, "unexpected exception: " + what});
    }
};

void check_expsum_algebra(Suite& suite, Rng& rng) {
    double worst = 0.0;
    std::uniform_real_distribution<double> tdist(0.0, 2.0);
    for (int rep = 0; rep < 5; ++rep) {
        const ExpSum a = random_expsum(rng, 3);
        const ExpSum b = random_expsum(rng, 2);
        const ExpSum c = random_expsum(rng, 2);
        const ExpSum assoc_l = (a + b) + c;
        const ExpSum assoc_r = a + (b + c);
        const ExpSum comm_l = a * b;
        const ExpSum comm_r = b * a;
        const ExpSum dist_l = a * (b + c);
        const ExpSum dist_r = a * b + a * c;
        for (int k = 0; k < 20; ++k) {
            const double t = tdist(rng);
            worst = std::max(worst, std::abs(assoc_l.eval(t) - assoc_r.eval(t)));
            worst = std::max(worst, std::abs(comm_l.eval(t) - comm_r.eval(t)));
            worst = std::max(worst, std::abs(dist_l.eval(t) - dist_r.eval(t)));
        }
    }
    suite.record("expsum-ring-axioms", worst, 1e-12);
}

void check_nonlinear_properties(Suite& suite, Rng& rng) {
    double bilin_worst = 0.0;
    double sym_worst = 0.0;
    for (const ProblemKind kind : {ProblemKind::Burgers, ProblemKind::ReducedMHD}) {
        ProblemDef p;
        p.kind = kind;
        p.nu = 0.05;
        p.eta = 0.03;
        const ModeSet ms = p.make_modes(kind == ProblemKind::Burgers ? 3 : 2);
        const int fields = p.fields();
        auto rand_cv = [&] {
            CoeffVector c(ms, fields);
            for (int i = 0; i < c.size(); ++i) c.values[i] = random_unit(rng);
            return c;
        };
        const CoeffVector a = rand_cv();
        const CoeffVector b = rand_cv();
        const CoeffVector c = rand_cv();
        const cplx alpha = random_unit(rng);
        const cplx beta = random_unit(rng);
        auto N = [&](const CoeffVector& u, const CoeffVector& v) {
            return kind == ProblemKind::Burgers ? burgers_nonlinear(u, v)
                                                : mhd_nonlinear(u, v);
        };
        CoeffVector combo(ms, fields);
        combo.values = alpha * a.values + beta * b.values;
        // Linearity in the first slot at fixed second slot.
        VectorXcd lhs = N(combo, c).values;
        VectorXcd rhs = alpha * N(a, c).values + beta * N(b, c).values;
        bilin_worst = std::max(bilin_worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
        // Linearity in the second slot at fixed first slot.
        lhs = N(c, combo).values;
        rhs = alpha * N(c, a).values + beta * N(c, b).values;
        bilin_worst = std::max(bilin_worst, (lhs - rhs).lpNorm<Eigen::Infinity>());

        const CoeffVector sym_a = random_symmetric_coeffs(rng, ms, fields);
        const CoeffVector sym_b = random_symmetric_coeffs(rng, ms, fields);
        sym_worst = std::max(sym_worst,
                             N(sym_a, sym_b).conjugate_symmetry_defect());
    }
    suite.record("nonlinear-bilinearity", bilin_worst, 1e-12);
    suite.record("nonlinear-conjugate-symmetry", sym_worst, 1e-12);
}

void check_hierarchy_initial_conditions(Suite& suite) {
    ProblemDef p;
    p.kind = ProblemKind::Burgers;
    p.nu = 0.05;
    const ModeSet ms = p.make_modes(3);
    const CoeffVector c0 =
        project_initial(p, ms, {ICSpec::parse("sin(x) + 0.3*sin(2x)", 1)});
    const HamConfig cfg{3, -1.0};
    const auto levels = build_hierarchy(p, ms, c0, cfg);
    double zero_worst = 0.0;
    VectorXcd total = VectorXcd::Zero(c0.size());
    for (const auto& lvl : levels) {
        const VectorXcd at0 = lvl.eval(0.0);
        if (lvl.order >= 1) zero_worst = std::max(zero_worst, at0.lpNorm<Eigen::Infinity>());
        total += at0;
    }
    suite.record("hierarchy-zero-initial-orders", zero_worst, 1e-12);
    suite.record("hierarchy-series-initial-sum",
                 (total - c0.values).lpNorm<Eigen::Infinity>(), 1e-12);
}

void check_channel_reconstruction(Suite& suite, Rng& rng) {
    ProblemDef p;
    p.kind = ProblemKind::Burgers;
    p.nu = 0.05;
    const ModeSet ms = p.make_modes(3);
    const CoeffVector c0 =
        project_initial(p, ms, {ICSpec::parse("sin(x) + 0.25*cos(3x)", 1)});
    const HamConfig cfg{3, -1.0};
    const auto levels = build_hierarchy(p, ms, c0, cfg);
    std::uniform_real_distribution<double> tdist(0.0, 1.5);
    double worst = 0.0;
    for (int m = 1; m <= cfg.m_tilde; ++m) {
        const auto f = forcing(m, levels, p, ms, cfg);
        const auto channels = extract_channels(f);
        for (int k = 0; k < 20; ++k) {
            const double t = tdist(rng);
            const VectorXcd recon = channels_eval(channels, static_cast<int>(f.size()), t);
            VectorXcd direct(f.size());
            for (size_t e = 0; e < f.size(); ++e) direct[static_cast<Eigen::Index>(e)] = f[e].eval(t);
            worst = std::max(worst, (recon - direct).lpNorm<Eigen::Infinity>());
        }
    }
    suite.record("channel-reconstruction", worst, 1e-12);
}

void check_lifted_structure(Suite& suite) {
    RunConfig cfg;
    cfg.problem = ProblemKind::Burgers;
    cfg.nu = 0.05;
    cfg.truncation = 2;
    cfg.m_tilde = 2;
    cfg.ic_u = "sin(x)";
    const LiftedSystem sys = build_system_for(cfg);

    double upper_max = 0.0;
    for (size_t pi = 0; pi < sys.layout.size(); ++pi) {
        for (size_t qi = pi + 1; qi < sys.layout.size(); ++qi) {
            const auto& rows = sys.layout[pi];
            const auto& cols = sys.layout[qi];
            upper_max = std::max(upper_max, sys.A.block(rows.offset, cols.offset,
                                                        rows.size, cols.size)
                                                .cwiseAbs()
                                                .maxCoeff());
        }
    }
    suite.record_bool("lifted-strict-block-triangularity", upper_max == 0.0,
                      "largest above-diagonal block entry " + format_float(upper_max));

    // Against per-order quadrature of the variation-of-constants integral.
    const ProblemDef p = cfg.problem_def();
    const ModeSet ms = p.make_modes(cfg.truncation);
    const VectorXd sigma = linear_rates(p, ms);
    const CoeffVector c0 = project_initial(p, ms, cfg.parse_ics());
    const HamConfig hcfg{cfg.m_tilde, cfg.mu};
    std::vector<DeformationLevel> levels;
    const double t_probe = 0.4;
    const LiftedSystem sys2 = build_lifted_system(p, ms, c0, hcfg, &levels);
    const VectorXcd lifted = classical_solution(sys2, t_probe);
    const auto slices = split_orders(sys2, lifted);
    const VectorXcd mdiag = (-sigma).cast<cplx>();
    double worst = 0.0;
    for (int m = 0; m <= cfg.m_tilde; ++m) {
        VectorXcd expect;
        if (m == 0) {
            expect = levels[0].eval(t_probe);
        } else {
            expect = duhamel_quadrature(mdiag, forcing(m, levels, p, ms, hcfg), t_probe);
        }
        worst = std::max(worst, (slices[static_cast<size_t>(m)] - expect).lpNorm<Eigen::Infinity>());
    }
    suite.record("lifted-vs-quadrature", worst, 1e-9);
}

void check_embedding_and_channel(Suite& suite, Rng& rng) {
    const int n = 5;
    const MatrixXcd A = random_stable_generator(rng, n);
    const double dt = 0.07;

    // Shift covariance: a surplus shift must cancel exactly in recovery.
    {
        const LindbladEmbedding base = split_and_shift(A);
        double worst = 0.0;
        for (const double extra : {0.1, 1.0}) {
            const LindbladEmbedding shifted = split_and_shift(A, extra);
            const double t = 0.3;
            const MatrixXcd rec_base = std::exp(base.gamma * t) * expm(base.Atilde * t);
            const MatrixXcd rec_shift =
                std::exp(shifted.gamma * t) * expm(shifted.Atilde * t);
            worst = std::max(worst, (rec_base - rec_shift).cwiseAbs().maxCoeff());
        }
        suite.record("embedding-shift-covariance", worst, 1e-8);
    }

    const LindbladEmbedding emb = split_and_shift(A);
    StepChannel ch = build_channel(emb, dt);
    suite.record("channel-trace-preservation", ch.trace_defect, 1e-10);
    suite.record("channel-choi-positivity", std::max(0.0, -ch.choi_min_eig), 1e-10);
    suite.record("channel-kraus-completeness", ch.completeness_residual, 1e-10);
    const StinespringData& stine = build_stinespring(ch);
    suite.record("channel-stinespring-isometry", stine.isometry_residual, 1e-10);

    // Dense superoperator assembled from sector action vs the full-space
    // Lindbladian exponential.
    suite.record("channel-dense-superop-agreement",
                 (ch.dense_superop() - dense_superop_from_embedding(emb, dt))
                     .cwiseAbs()
                     .maxCoeff(),
                 1e-10);

    // Realization agreement on an evolved state.
    VectorXcd y0(n);
    for (int i = 0; i < n; ++i) y0[i] = random_unit(rng);
    const DensityState st0 = init_density(y0);
    const DensityState s_sup = evolve(ch, st0, 3, Realization::Superop);
    const DensityState s_kra = evolve(ch, st0, 3, Realization::Kraus);
    const DensityState s_sti = evolve(ch, st0, 3, Realization::Stinespring);
    auto state_diff = [](const DensityState& a, const DensityState& b) {
        return (a.full() - b.full()).cwiseAbs().maxCoeff();
    };
    const double realization_worst =
        std::max(state_diff(s_sup, s_kra), std::max(state_diff(s_sup, s_sti),
                                                    state_diff(s_kra, s_sti)));
    suite.record("channel-realization-agreement", realization_worst, 1e-9);

    // Readout identity on the evolved state.
    const VectorXcd y0hat = y0 / y0.norm();
    const VectorXcd direct = readout_direct(s_sup, y0hat);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(readout_component(s_sup, y0hat, j) - direct[j]));
    }
    suite.record("readout-observable-identity", worst, 1e-12);
}

void check_expm_group(Suite& suite, Rng& rng) {
    MatrixXcd A = random_matrix(rng, 16);
    A /= std::max(1.0, A.norm());
    const double t1 = 0.4, t2 = 0.75;
    const MatrixXcd lhs = expm(A * (t1 + t2));
    const MatrixXcd rhs = expm(A * t1) * expm(A * t2);
    suite.record("expm-group-property", (lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
}

void check_metric_properties(Suite& suite, Rng& rng) {
    const int n = 64;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridSolution1D a, b;
    a.x = b.x = VectorXd::LinSpaced(n, 0.0, 2.0 * 3.141592653589793 * (n - 1) / n);
    a.u = VectorXd::Zero(n);
    b.u = VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        a.u[i] = dist(rng);
        b.u[i] = dist(rng);
    }
    const auto e_ab = error_metrics(a, b);
    const auto e_ba = error_metrics(b, a);
    suite.record("metric-rms-symmetry", std::abs(e_ab.rms - e_ba.rms), 1e-12);
    suite.record_bool("metric-positivity", e_ab.rms >= 0.0 && e_ab.rel_l2 >= 0.0,
                      "rms " + format_float(e_ab.rms) + ", rel_l2 " +
                          format_float(e_ab.rel_l2));
    const double alpha = 3.7;
    GridSolution1D as = a, bs = b;
    as.u *= alpha;
    bs.u *= alpha;
    const auto e_scaled = error_metrics(as, bs);
    suite.record("metric-l2-scale-covariance",
                 std::abs(e_scaled.rel_l2 - e_ab.rel_l2) / e_ab.rel_l2, 1e-12);

    const auto e_same = error_metrics(a, a);
    suite.record_bool("metric-identical-zero", e_same.rms == 0.0 && e_same.rel_l2 == 0.0,
                      "rms " + format_float(e_same.rms));
}

void check_output_determinism(Suite& suite) {
    RunConfig cfg;
    cfg.problem = ProblemKind::Burgers;
    cfg.nu = 0.05;
    cfg.truncation = 2;
    cfg.m_tilde = 1;
    cfg.dt = 0.1;
    cfg.steps = 2;
    cfg.engine = EngineMode::ClassicalExpm;
    cfg.reference = true;
    cfg.fdm_nx = 64;
    cfg.fdm_dt = 1e-3;
    const SweepResult s1 = sweep_orders(cfg, 1);
    const SweepResult s2 = sweep_orders(cfg, 1);
    const bool same = errors_vs_order_csv(s1) == errors_vs_order_csv(s2) &&
                      profile_csv(s1) == profile_csv(s2) &&
                      error_report_csv(s1.report) == error_report_csv(s2.report);
    suite.record_bool("csv-output-determinism", same,
                      same ? "byte-identical rerun" : "rerun bytes differ");
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(unsigned long seed) {
    Suite suite;
    Rng rng(seed);
    auto guarded = [&suite](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            suite.record_error(name, e.what());
        }
    };
    guarded("expsum-ring-axioms", [&] { check_expsum_algebra(suite, rng); });
    guarded("nonlinear-properties", [&] { check_nonlinear_properties(suite, rng); });
    guarded("hierarchy-initial-conditions",
            [&] { check_hierarchy_initial_conditions(suite); });
    guarded("channel-reconstruction", [&] { check_channel_reconstruction(suite, rng); });
    guarded("lifted-structure", [&] { check_lifted_structure(suite); });
    guarded("embedding-and-channel", [&] { check_embedding_and_channel(suite, rng); });
    guarded("expm-group-property", [&] { check_expm_group(suite, rng); });
    guarded("metric-properties", [&] { check_metric_properties(suite, rng); });
    guarded("output-determinism", [&] { check_output_determinism(suite); });
    return suite.results;
}

int report_checks(const std::vector<CheckResult>& results, std::ostream& out) {
    int failures = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << '\n';
        if (!r.pass) ++failures;
    }
    out << results.size() << " checks, " << failures << " failure"
        << (failures == 1 ? "" : "s") << '\n';
    return failures;
}

}  // namespace homlind
