#include "homlind/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "homlind/io.hpp"

namespace homlind {

std::string to_string(EngineMode mode) {
    switch (mode) {
        case EngineMode::LindbladFull: return "lindblad-full";
        case EngineMode::LindbladKraus: return "lindblad-kraus";
        case EngineMode::LindbladStinespring: return "lindblad-stinespring";
        case EngineMode::ClassicalExpm: return "classical-expm";
    }
    throw std::logic_error("unknown engine mode");
}

EngineMode parse_engine_mode(const std::string& text) {
    if (text == "lindblad-full") return EngineMode::LindbladFull;
    if (text == "lindblad-kraus") return EngineMode::LindbladKraus;
    if (text == "lindblad-stinespring") return EngineMode::LindbladStinespring;
    if (text == "classical-expm") return EngineMode::ClassicalExpm;
    throw std::invalid_argument(
        "unknown engine mode \"" + text +
        "\" (expected lindblad-full | lindblad-kraus | lindblad-stinespring | "
        "classical-expm)");
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key \"" + key +
                                    "\": cannot parse \"" + value + "\" as a number");
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key \"" + key +
                                    "\": cannot parse \"" + value + "\" as an integer");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "off" || value == "no") return false;
    throw std::invalid_argument("config key \"" + key +
                                "\": cannot parse \"" + value + "\" as a boolean");
}

}  // namespace

void RunConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be > 0");
    if (steps < 1) throw std::invalid_argument("config: steps must be >= 1");
    if (truncation < 1) throw std::invalid_argument("config: truncation must be >= 1");
    if (m_tilde < 0) throw std::invalid_argument("config: m_tilde must be >= 0");
    problem_def().validate();
    parse_ics();
    if (problem == ProblemKind::Burgers) {
        if (fdm_nx < 2) throw std::invalid_argument("config: fdm_nx must be >= 2");
        if (!(fdm_dt > 0.0)) throw std::invalid_argument("config: fdm_dt must be > 0");
    } else {
        if (psm_nx < 2 || psm_ny < 2)
            throw std::invalid_argument("config: psm grid sizes must be >= 2");
        if (!(psm_dt > 0.0)) throw std::invalid_argument("config: psm_dt must be > 0");
    }
    if (!(gamma_margin >= 0.0))
        throw std::invalid_argument("config: gamma_margin must be >= 0");
}

ProblemDef RunConfig::problem_def() const {
    ProblemDef def;
    def.kind = problem;
    def.nu = nu;
    def.eta = eta;
    return def;
}

std::vector<ICSpec> RunConfig::parse_ics() const {
    if (problem == ProblemKind::Burgers) {
        return {ICSpec::parse(ic_u, 1)};
    }
    return {ICSpec::parse(ic_omega, 2), ICSpec::parse(ic_xi, 2)};
}

RunConfig preset_config(const std::string& name) {
    RunConfig c;
    if (name == "burgers-paper") {
        c.problem = ProblemKind::Burgers;
        c.nu = 0.05;
        c.truncation = 4;
        c.m_tilde = 4;
        c.mu = -1.0;
        c.dt = 0.05;
        c.steps = 10;
        c.ic_u = "sin(x)";
        c.fdm_nx = 256;
        c.fdm_dt = 1e-4;
        return c;
    }
    if (name == "mhd-paper") {
        c.problem = ProblemKind::ReducedMHD;
        c.nu = 0.05;
        c.eta = 0.03;
        c.truncation = 1;
        c.m_tilde = 1;
        c.mu = -1.0;
        c.dt = 0.05;
        c.steps = 10;
        c.ic_omega = "sin(x) + 0.5*sin(x-y)";
        c.ic_xi = "cos(y) + 0.25*cos(x+y)";
        c.psm_nx = 64;
        c.psm_ny = 64;
        c.psm_dt = 1e-3;
        return c;
    }
    throw std::invalid_argument("unknown preset \"" + name +
                                "\" (available: burgers-paper, mhd-paper)");
}

std::vector<std::string> preset_names() { return {"burgers-paper", "mhd-paper"}; }

void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value) {
    if (key == "problem") {
        if (value == "burgers") {
            config.problem = ProblemKind::Burgers;
        } else if (value == "mhd" || value == "reduced-mhd") {
            config.problem = ProblemKind::ReducedMHD;
        } else {
            throw std::invalid_argument("config key \"problem\": expected burgers | mhd, got \"" +
                                        value + "\"");
        }
    } else if (key == "nu") {
        config.nu = parse_double(key, value);
    } else if (key == "eta") {
        config.eta = parse_double(key, value);
    } else if (key == "truncation") {
        config.truncation = static_cast<int>(parse_long(key, value));
    } else if (key == "m_tilde") {
        config.m_tilde = static_cast<int>(parse_long(key, value));
    } else if (key == "mu") {
        config.mu = parse_double(key, value);
    } else if (key == "dt") {
        config.dt = parse_double(key, value);
    } else if (key == "steps") {
        config.steps = static_cast<int>(parse_long(key, value));
    } else if (key == "engine") {
        config.engine = parse_engine_mode(value);
    } else if (key == "reference") {
        config.reference = parse_bool(key, value);
    } else if (key == "out_dir") {
        config.out_dir = value;
    } else if (key == "seed") {
        config.seed = static_cast<unsigned long>(parse_long(key, value));
    } else if (key == "gamma_margin") {
        config.gamma_margin = parse_double(key, value);
    } else if (key == "ic_u") {
        config.ic_u = value;
    } else if (key == "ic_omega") {
        config.ic_omega = value;
    } else if (key == "ic_xi") {
        config.ic_xi = value;
    } else if (key == "fdm_nx") {
        config.fdm_nx = static_cast<int>(parse_long(key, value));
    } else if (key == "fdm_dt") {
        config.fdm_dt = parse_double(key, value);
    } else if (key == "psm_nx") {
        config.psm_nx = static_cast<int>(parse_long(key, value));
    } else if (key == "psm_ny") {
        config.psm_ny = static_cast<int>(parse_long(key, value));
    } else if (key == "psm_dt") {
        config.psm_dt = parse_double(key, value);
    } else {
        throw std::invalid_argument("unknown config key \"" + key + "\"");
    }
}

RunConfig parse_config_text(const std::string& text, const RunConfig& base) {
    RunConfig config = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value, got \"" + line + "\"");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        }
        apply_config_entry(config, key, value);
    }
    return config;
}

RunConfig parse_config_file(const std::string& path, const RunConfig& base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), base);
}

std::string config_to_text(const RunConfig& c) {
    std::ostringstream out;
    out << "problem = " << (c.problem == ProblemKind::Burgers ? "burgers" : "mhd") << "\n";
    out << "nu = " << format_float(c.nu) << "\n";
    out << "eta = " << format_float(c.eta) << "\n";
    out << "truncation = " << c.truncation << "\n";
    out << "m_tilde = " << c.m_tilde << "\n";
    out << "mu = " << format_float(c.mu) << "\n";
    out << "dt = " << format_float(c.dt) << "\n";
    out << "steps = " << c.steps << "\n";
    out << "engine = " << to_string(c.engine) << "\n";
    out << "reference = " << (c.reference ? "true" : "false") << "\n";
    out << "out_dir = " << c.out_dir << "\n";
    out << "seed = " << c.seed << "\n";
    out << "gamma_margin = " << format_float(c.gamma_margin) << "\n";
    if (c.problem == ProblemKind::Burgers) {
        out << "ic_u = " << c.ic_u << "\n";
        out << "fdm_nx = " << c.fdm_nx << "\n";
        out << "fdm_dt = " << format_float(c.fdm_dt) << "\n";
    } else {
        out << "ic_omega = " << c.ic_omega << "\n";
        out << "ic_xi = " << c.ic_xi << "\n";
        out << "psm_nx = " << c.psm_nx << "\n";
        out << "psm_ny = " << c.psm_ny << "\n";
        out << "psm_dt = " << format_float(c.psm_dt) << "\n";
    }
    return out.str();
}

}  // namespace homlind
