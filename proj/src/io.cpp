#include "homlind/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "homlind/config.hpp"
#include "homlind/runner.hpp"

namespace homlind {

using nlohmann::json;

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

namespace {

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json vector_json(const VectorXcd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_json(v[i]));
    return arr;
}

json matrix_json_rowmajor(const MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json config_json(const RunConfig& c) {
    json j;
    j["problem"] = (c.problem == ProblemKind::Burgers) ? "burgers" : "mhd";
    j["nu"] = c.nu;
    j["eta"] = c.eta;
    j["truncation"] = c.truncation;
    j["m_tilde"] = c.m_tilde;
    j["mu"] = c.mu;
    j["dt"] = c.dt;
    j["steps"] = c.steps;
    j["engine"] = to_string(c.engine);
    j["reference"] = c.reference;
    j["out_dir"] = c.out_dir;
    j["seed"] = c.seed;
    j["gamma_margin"] = c.gamma_margin;
    if (c.problem == ProblemKind::Burgers) {
        j["ic_u"] = c.ic_u;
        j["fdm_nx"] = c.fdm_nx;
        j["fdm_dt"] = c.fdm_dt;
    } else {
        j["ic_omega"] = c.ic_omega;
        j["ic_xi"] = c.ic_xi;
        j["psm_nx"] = c.psm_nx;
        j["psm_ny"] = c.psm_ny;
        j["psm_dt"] = c.psm_dt;
    }
    return j;
}

}  // namespace

std::string lifted_system_json(const LiftedSystem& sys) {
    json j;
    j["dim"] = sys.dim();
    j["n_state"] = sys.n_state;
    j["m_tilde"] = sys.m_tilde;
    j["y0_norm"] = sys.y0_norm;
    json layout = json::array();
    for (const auto& slice : sys.layout) {
        layout.push_back(
            {{"name", slice.name}, {"offset", slice.offset}, {"size", slice.size}});
    }
    j["layout"] = layout;
    json chans = json::array();
    for (const auto& per_order : sys.channels) {
        json order_arr = json::array();
        for (const auto& ch : per_order) {
            order_arr.push_back({{"rate", complex_json(ch.rate)},
                                 {"power", ch.power},
                                 {"gamma", ch.gamma},
                                 {"v", vector_json(ch.v)}});
        }
        chans.push_back(order_arr);
    }
    j["channels"] = chans;
    j["A"] = matrix_json_rowmajor(sys.A);
    j["y0"] = vector_json(sys.y0);
    return j.dump(2) + "\n";
}

std::string run_report_json(const RunReport& report) {
    json j;
    j["config"] = config_json(report.config);
    j["lifted_dim"] = report.lifted_dim;
    j["gamma"] = report.gamma;
    j["y0_norm"] = report.y0_norm;
    json layout = json::array();
    for (const auto& slice : report.layout) {
        layout.push_back(
            {{"name", slice.name}, {"offset", slice.offset}, {"size", slice.size}});
    }
    j["layout"] = layout;
    j["end_to_end_rel_error"] = report.end_to_end_rel_error;
    j["y_engine"] = vector_json(report.y_engine);
    j["y_oracle"] = vector_json(report.y_oracle);
    json orders = json::array();
    for (size_t m = 0; m < report.orders.size(); ++m) {
        orders.push_back({{"order", m}, {"coeffs", vector_json(report.orders[m].values)}});
    }
    j["orders"] = orders;
    j["total"] = vector_json(report.total.values);
    json diags = json::array();
    for (size_t k = 0; k < report.diagnostics.size(); ++k) {
        const auto& d = report.diagnostics[k];
        diags.push_back({{"step", k + 1},
                         {"trace", d.trace},
                         {"min_eigenvalue", d.min_eigenvalue},
                         {"r01_norm", d.r01_norm}});
    }
    j["diagnostics"] = diags;
    if (report.has_reference) {
        json m;
        if (report.config.problem == ProblemKind::Burgers) {
            m["grid"] = report.ref_1d.size();
            m["eps_rms_percent"] = report.err_1d.rms;
            m["eps_l2_percent"] = report.err_1d.rel_l2;
            m["imag_residual"] = report.lham_1d.imag_residual;
        } else {
            m["grid_nx"] = report.ref_2d.nx;
            m["grid_ny"] = report.ref_2d.ny;
            m["eps_rms_omega_percent"] = report.err_2d.rms_omega;
            m["eps_rms_xi_percent"] = report.err_2d.rms_xi;
            m["eps_l2_omega_percent"] = report.err_2d.rel_l2_omega;
            m["eps_l2_xi_percent"] = report.err_2d.rel_l2_xi;
            m["eps_l2_combined_percent"] = report.err_2d.combined_rel_l2;
            m["imag_residual"] = report.lham_2d.imag_residual;
        }
        j["metrics"] = m;
    }
    json t;
    for (const auto& [name, sec] : report.timings_sec) t[name] = sec;
    j["timings_sec"] = t;
    return j.dump(2) + "\n";
}

std::string errors_vs_order_csv(const SweepResult& sweep) {
    std::ostringstream out;
    const bool burgers = sweep.report.config.problem == ProblemKind::Burgers;
    if (burgers) {
        out << "m_tilde,eps_rms_percent,eps_l2_percent\n";
        for (size_t m = 0; m < sweep.per_order_1d.size(); ++m) {
            const auto& e = sweep.per_order_1d[m];
            out << m << ',' << format_float(e.rms) << ',' << format_float(e.rel_l2)
                << '\n';
        }
    } else {
        out << "m_tilde,eps_rms_omega_percent,eps_rms_xi_percent,"
               "eps_l2_omega_percent,eps_l2_xi_percent,eps_l2_combined_percent\n";
        for (size_t m = 0; m < sweep.per_order_2d.size(); ++m) {
            const auto& e = sweep.per_order_2d[m];
            out << m << ',' << format_float(e.rms_omega) << ','
                << format_float(e.rms_xi) << ',' << format_float(e.rel_l2_omega) << ','
                << format_float(e.rel_l2_xi) << ','
                << format_float(e.combined_rel_l2) << '\n';
        }
    }
    return out.str();
}

std::string profile_csv(const SweepResult& sweep) {
    std::ostringstream out;
    out << "x,u_ref";
    for (size_t m = 0; m < sweep.partial_sums.size(); ++m) out << ",u_mt" << m;
    out << '\n';
    if (!sweep.report.has_reference) return out.str();
    const auto& ref = sweep.report.ref_1d;
    std::vector<GridSolution1D> curves;
    curves.reserve(sweep.partial_sums.size());
    for (const auto& sum : sweep.partial_sums) {
        curves.push_back(evaluate_on_grid(sum, ref.size(), ref.time));
    }
    for (int i = 0; i < ref.size(); ++i) {
        out << format_float(ref.x[i]) << ',' << format_float(ref.u[i]);
        for (const auto& c : curves) out << ',' << format_float(c.u[i]);
        out << '\n';
    }
    return out.str();
}

std::string grid1d_csv(const GridSolution1D& sol) {
    std::ostringstream out;
    out << "x,u\n";
    for (int i = 0; i < sol.size(); ++i) {
        out << format_float(sol.x[i]) << ',' << format_float(sol.u[i]) << '\n';
    }
    return out.str();
}

std::string grid2d_field_csv(const MatrixXd& field) {
    std::ostringstream out;
    out << "x_index,y_index,value\n";
    for (Eigen::Index i = 0; i < field.rows(); ++i) {
        for (Eigen::Index j = 0; j < field.cols(); ++j) {
            out << i << ',' << j << ',' << format_float(field(i, j)) << '\n';
        }
    }
    return out.str();
}

std::string error_report_csv(const RunReport& report) {
    std::ostringstream out;
    if (!report.has_reference) {
        out << "metric,value_percent\n";
        return out.str();
    }
    if (report.config.problem == ProblemKind::Burgers) {
        out << "# comparison grid: " << report.ref_1d.size() << " nodes\n";
        out << "metric,value_percent\n";
        out << "eps_rms," << format_float(report.err_1d.rms) << '\n';
        out << "eps_l2," << format_float(report.err_1d.rel_l2) << '\n';
    } else {
        out << "# comparison grid: " << report.ref_2d.nx << "x" << report.ref_2d.ny
            << " nodes\n";
        out << "metric,value_percent\n";
        out << "eps_rms_omega," << format_float(report.err_2d.rms_omega) << '\n';
        out << "eps_rms_xi," << format_float(report.err_2d.rms_xi) << '\n';
        out << "eps_l2_omega," << format_float(report.err_2d.rel_l2_omega) << '\n';
        out << "eps_l2_xi," << format_float(report.err_2d.rel_l2_xi) << '\n';
        out << "eps_l2_combined," << format_float(report.err_2d.combined_rel_l2) << '\n';
    }
    return out.str();
}

namespace {

std::string diagnostics_csv(const RunReport& report) {
    std::ostringstream out;
    out << "step,trace,min_eigenvalue,r01_norm\n";
    for (size_t k = 0; k < report.diagnostics.size(); ++k) {
        const auto& d = report.diagnostics[k];
        out << (k + 1) << ',' << format_float(d.trace) << ','
            << format_float(d.min_eigenvalue) << ',' << format_float(d.r01_norm)
            << '\n';
    }
    return out.str();
}

}  // namespace

void write_run_artifacts(const RunReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_text_file((dir / "report.json").string(), run_report_json(report));
    write_text_file((dir / "config.txt").string(), config_to_text(report.config));
    write_text_file((dir / "diagnostics.csv").string(), diagnostics_csv(report));
    if (report.has_reference) {
        write_text_file((dir / "metrics.csv").string(), error_report_csv(report));
        if (report.config.problem == ProblemKind::Burgers) {
            write_text_file((dir / "profile_lham.csv").string(),
                            grid1d_csv(report.lham_1d));
            write_text_file((dir / "profile_reference.csv").string(),
                            grid1d_csv(report.ref_1d));
        } else {
            write_text_file((dir / "omega_lham.csv").string(),
                            grid2d_field_csv(report.lham_2d.omega));
            write_text_file((dir / "omega_reference.csv").string(),
                            grid2d_field_csv(report.ref_2d.omega));
            write_text_file((dir / "omega_error.csv").string(),
                            grid2d_field_csv(report.err_2d.diff_omega));
            write_text_file((dir / "xi_lham.csv").string(),
                            grid2d_field_csv(report.lham_2d.xi));
            write_text_file((dir / "xi_reference.csv").string(),
                            grid2d_field_csv(report.ref_2d.xi));
            write_text_file((dir / "xi_error.csv").string(),
                            grid2d_field_csv(report.err_2d.diff_xi));
        }
    }
}

void write_sweep_artifacts(const SweepResult& sweep, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_run_artifacts(sweep.report, out_dir);
    write_text_file((dir / "errors_vs_order.csv").string(), errors_vs_order_csv(sweep));
    if (sweep.report.config.problem == ProblemKind::Burgers) {
        write_text_file((dir / "profile.csv").string(), profile_csv(sweep));
    }
}

}  // namespace homlind
