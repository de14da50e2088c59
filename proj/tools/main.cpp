#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homlind/checks.hpp"
#include "homlind/config.hpp"
#include "homlind/io.hpp"
#include "homlind/runner.hpp"

namespace {

using namespace homlind;

// Every configuration key doubles as a --flag; precedence is
// defaults < --preset < --config file < explicit flags.
struct FlagSet {
    std::string preset;
    std::string config_file;
    std::map<std::string, std::string> values;
    std::vector<std::pair<std::string, CLI::Option*>> opts;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "built-in parameter set (burgers-paper | mhd-paper)")
            ->check(CLI::IsMember(preset_names()));
        cmd->add_option("--config", config_file, "key = value configuration file");
        static const std::map<std::string, std::string> help = {
            {"problem", "burgers | mhd"},
            {"nu", "viscosity"},
            {"eta", "resistivity (mhd)"},
            {"truncation", "Fourier mode cutoff J"},
            {"m_tilde", "homotopy series truncation order"},
            {"mu", "convergence-control constant"},
            {"dt", "time step"},
            {"steps", "number of time steps"},
            {"engine",
             "lindblad-full | lindblad-kraus | lindblad-stinespring | classical-expm"},
            {"reference", "compute the reference solution and error metrics"},
            {"out_dir", "directory for report/CSV artifacts"},
            {"seed", "seed for randomized checks"},
            {"gamma_margin", "surplus added to the scalar shift"},
            {"ic_u", "initial condition, e.g. \"sin(x)\""},
            {"ic_omega", "vorticity initial condition (mhd)"},
            {"ic_xi", "magnetic potential initial condition (mhd)"},
            {"fdm_nx", "finite-difference reference grid size"},
            {"fdm_dt", "finite-difference reference time step"},
            {"psm_nx", "pseudo-spectral reference grid size (x)"},
            {"psm_ny", "pseudo-spectral reference grid size (y)"},
            {"psm_dt", "pseudo-spectral reference time step"},
        };
        for (const auto& [key, text] : help) {
            auto& slot = values[key];
            opts.emplace_back(key, cmd->add_option("--" + key, slot, text));
        }
    }

    RunConfig resolve() const {
        RunConfig cfg = preset.empty() ? RunConfig{} : preset_config(preset);
        if (!config_file.empty()) cfg = parse_config_file(config_file, cfg);
        for (const auto& [key, opt] : opts) {
            if (opt->count() > 0) apply_config_entry(cfg, key, values.at(key));
        }
        return cfg;
    }
};

void print_run_summary(const RunReport& rep) {
    const auto& cfg = rep.config;
    std::cout << "problem " << (cfg.problem == ProblemKind::Burgers ? "burgers" : "mhd")
              << ", engine " << to_string(cfg.engine) << ", m_tilde " << cfg.m_tilde
              << ", T = " << format_float(cfg.total_time()) << "\n";
    std::cout << "lifted dimension " << rep.lifted_dim << ", gamma "
              << format_float(rep.gamma) << "\n";
    std::cout << "end-to-end relative error vs exp(AT)y0: "
              << format_float(rep.end_to_end_rel_error) << "\n";
    if (rep.has_reference) {
        if (cfg.problem == ProblemKind::Burgers) {
            std::cout << "eps_rms = " << format_float(rep.err_1d.rms)
                      << "%, eps_l2 = " << format_float(rep.err_1d.rel_l2) << "% ("
                      << rep.ref_1d.size() << "-node reference)\n";
        } else {
            std::cout << "eps_rms omega/xi = " << format_float(rep.err_2d.rms_omega)
                      << "% / " << format_float(rep.err_2d.rms_xi)
                      << "%, combined eps_l2 = "
                      << format_float(rep.err_2d.combined_rel_l2) << "% ("
                      << rep.ref_2d.nx << "x" << rep.ref_2d.ny << " reference)\n";
        }
    }
    for (const auto& [phase, sec] : rep.timings_sec) {
        std::cout << "time " << phase << ": " << format_float(sec) << " s\n";
    }
    if (!cfg.out_dir.empty()) std::cout << "artifacts written to " << cfg.out_dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spectral homotopy lift of Burgers/reduced-MHD dynamics with "
        "Lindblad-channel evolution and classical references"};
    app.require_subcommand(1);

    FlagSet run_flags, sweep_flags, dump_flags, check_flags;

    CLI::App* cmd_run =
        app.add_subcommand("run", "execute the full pipeline once");
    run_flags.attach(cmd_run);

    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "error-vs-order table sharing one reference solution");
    sweep_flags.attach(cmd_sweep);
    int m_tilde_max = -1;
    cmd_sweep->add_option("--m_tilde_max", m_tilde_max,
                          "largest series order (default: the config's m_tilde)");

    CLI::App* cmd_dump = app.add_subcommand(
        "dump-system", "write the lifted block system as JSON");
    dump_flags.attach(cmd_dump);
    std::string dump_out;
    cmd_dump->add_option("--out", dump_out, "output file (default: stdout)");

    CLI::App* cmd_check =
        app.add_subcommand("check", "run the seeded invariant suite");
    check_flags.attach(cmd_check);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            const RunReport rep = run(run_flags.resolve());
            print_run_summary(rep);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            RunConfig cfg = sweep_flags.resolve();
            const int mmax = (m_tilde_max < 0) ? cfg.m_tilde : m_tilde_max;
            const SweepResult sweep = sweep_orders(cfg, mmax);
            std::cout << errors_vs_order_csv(sweep);
            if (!cfg.out_dir.empty())
                std::cout << "artifacts written to " << cfg.out_dir << "\n";
            return 0;
        }
        if (cmd_dump->parsed()) {
            const RunConfig cfg = dump_flags.resolve();
            const std::string doc = lifted_system_json(build_system_for(cfg));
            if (dump_out.empty()) {
                std::cout << doc;
            } else {
                write_text_file(dump_out, doc);
                std::cout << "lifted system written to " << dump_out << "\n";
            }
            return 0;
        }
        if (cmd_check->parsed()) {
            const RunConfig cfg = check_flags.resolve();
            const auto results = run_invariant_suite(cfg.seed);
            const int failures = report_checks(results, std::cout);
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
