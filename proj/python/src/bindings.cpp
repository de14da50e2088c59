#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "homlind/checks.hpp"
#include "homlind/config.hpp"
#include "homlind/io.hpp"
#include "homlind/runner.hpp"

namespace py = pybind11;

namespace {

using namespace homlind;

RunConfig config_from_dict(const py::dict& d) {
    RunConfig cfg;
    if (d.contains("preset")) {
        cfg = preset_config(d["preset"].cast<std::string>());
    }
    for (auto item : d) {
        const std::string key = py::str(item.first);
        if (key == "preset") continue;
        const py::object value = py::reinterpret_borrow<py::object>(item.second);
        std::string text;
        if (py::isinstance<py::bool_>(value)) {
            text = value.cast<bool>() ? "true" : "false";
        } else {
            text = py::str(value);  // repr round-trips floats exactly
        }
        apply_config_entry(cfg, key, text);
    }
    return cfg;
}

py::object json_loads(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Fourier-Galerkin homotopy lift with Lindblad-channel evolution: "
        "pipeline driver, system dump, and invariant checks";

    m.def("presets", &preset_names, "Names of the built-in parameter sets.");

    m.def(
        "run",
        [](const py::dict& config) {
            const RunReport report = run(config_from_dict(config));
            return json_loads(run_report_json(report));
        },
        py::arg("config"),
        "Execute the full pipeline for a configuration dict; returns the "
        "report as nested dicts (complex values as [re, im] pairs).");

    m.def(
        "sweep",
        [](const py::dict& config, int m_tilde_max) {
            const RunConfig cfg = config_from_dict(config);
            const int mmax = (m_tilde_max < 0) ? cfg.m_tilde : m_tilde_max;
            const SweepResult sweep = sweep_orders(cfg, mmax);
            py::dict out;
            out["report"] = json_loads(run_report_json(sweep.report));
            py::list rows;
            if (cfg.problem == ProblemKind::Burgers) {
                for (size_t mt = 0; mt < sweep.per_order_1d.size(); ++mt) {
                    const auto& e = sweep.per_order_1d[mt];
                    py::dict row;
                    row["m_tilde"] = mt;
                    row["eps_rms_percent"] = e.rms;
                    row["eps_l2_percent"] = e.rel_l2;
                    rows.append(row);
                }
            } else {
                for (size_t mt = 0; mt < sweep.per_order_2d.size(); ++mt) {
                    const auto& e = sweep.per_order_2d[mt];
                    py::dict row;
                    row["m_tilde"] = mt;
                    row["eps_rms_omega_percent"] = e.rms_omega;
                    row["eps_rms_xi_percent"] = e.rms_xi;
                    row["eps_l2_omega_percent"] = e.rel_l2_omega;
                    row["eps_l2_xi_percent"] = e.rel_l2_xi;
                    row["eps_l2_combined_percent"] = e.combined_rel_l2;
                    rows.append(row);
                }
            }
            out["rows"] = rows;
            out["errors_vs_order_csv"] = errors_vs_order_csv(sweep);
            return out;
        },
        py::arg("config"), py::arg("m_tilde_max") = -1,
        "Error-vs-order table sharing one reference solution.");

    m.def(
        "dump_system",
        [](const py::dict& config) {
            return json_loads(lifted_system_json(build_system_for(config_from_dict(config))));
        },
        py::arg("config"),
        "Lifted block system (layout, dense matrix, initial vector).");

    m.def(
        "check",
        [](unsigned long seed) {
            py::list out;
            for (const auto& r : run_invariant_suite(seed)) {
                py::dict item;
                item["name"] = r.name;
                item["passed"] = r.pass;
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("seed") = 20240501UL,
        "Seeded invariant suite; one dict per check.");

    m.def(
        "config_text",
        [](const py::dict& config) { return config_to_text(config_from_dict(config)); },
        py::arg("config"), "Round-trippable flat text form of a configuration.");
}
