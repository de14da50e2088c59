#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "homlind/hierarchy.hpp"
#include "homlind/runner.hpp"

using namespace homlind;

namespace {

// Small configuration that exercises the whole pipeline in well under a
// second: two modes of viscous advection, one correction order, two steps.
RunConfig tiny_burgers() {
  RunConfig c;
  c.problem = ProblemKind::Burgers;
  c.nu = 0.05;
  c.truncation = 2;
  c.m_tilde = 1;
  c.dt = 0.1;
  c.steps = 2;
  c.engine = EngineMode::ClassicalExpm;
  c.reference = false;
  c.fdm_nx = 64;
  c.fdm_dt = 1e-3;
  return c;
}

}  // namespace

TEST_SUITE("runner") {

TEST_CASE("the linear-system route is exact by construction") {
  const RunReport rep = run(tiny_burgers());
  CHECK(rep.lifted_dim == 11);
  REQUIRE(rep.layout.size() == 3);
  CHECK(rep.layout[0].name == "u0");
  CHECK(rep.layout[1].name == "z1");
  CHECK(rep.layout[2].name == "u1");
  CHECK(rep.end_to_end_rel_error == 0.0);
  CHECK((rep.y_engine - rep.y_oracle).cwiseAbs().maxCoeff() == 0.0);
  CHECK(rep.diagnostics.empty());
  REQUIRE(rep.orders.size() == 2);
  VectorXcd summed = rep.orders[0].values + rep.orders[1].values;
  CHECK((summed - rep.total.values).cwiseAbs().maxCoeff() == 0.0);
  CHECK_FALSE(rep.has_reference);
}

TEST_CASE("the dissipative engine tracks the oracle and the hierarchy") {
  RunConfig cfg = tiny_burgers();
  cfg.engine = EngineMode::LindbladFull;
  const RunReport rep = run(cfg);
  CHECK(rep.gamma > 0.0);
  CHECK(rep.end_to_end_rel_error <= 1e-8);
  REQUIRE(rep.diagnostics.size() == 2);
  for (const auto& d : rep.diagnostics) {
    CHECK(std::abs(d.trace - 1.0) <= 1e-10);
    CHECK(d.min_eigenvalue >= -1e-10);
    CHECK(d.r01_norm > 0.0);
  }

  // The recovered per-order coefficients must match the closed-form
  // deformation solutions.
  const ProblemDef problem = cfg.problem_def();
  const ModeSet ms = problem.make_modes(cfg.truncation);
  const CoeffVector c0 = project_initial(problem, ms, cfg.parse_ics());
  const auto levels =
      build_hierarchy(problem, ms, c0, HamConfig{cfg.m_tilde, cfg.mu});
  REQUIRE(levels.size() == rep.orders.size());
  const double T = cfg.total_time();
  for (size_t m = 0; m < levels.size(); ++m) {
    const VectorXcd exact = levels[m].eval(T);
    CHECK((rep.orders[m].values - exact).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("all four engines recover the same state") {
  std::vector<VectorXcd> answers;
  for (const EngineMode mode :
       {EngineMode::ClassicalExpm, EngineMode::LindbladFull,
        EngineMode::LindbladKraus, EngineMode::LindbladStinespring}) {
    RunConfig cfg = tiny_burgers();
    cfg.engine = mode;
    answers.push_back(run(cfg).y_engine);
  }
  const double scale = answers[0].norm();
  REQUIRE(scale > 0.0);
  for (size_t i = 1; i < answers.size(); ++i) {
    CHECK((answers[i] - answers[0]).norm() / scale <= 1e-8);
  }
}

TEST_CASE("repeated runs are bitwise deterministic") {
  RunConfig cfg = tiny_burgers();
  cfg.engine = EngineMode::LindbladFull;
  const RunReport a = run(cfg);
  const RunReport b = run(cfg);
  REQUIRE(a.y_engine.size() == b.y_engine.size());
  CHECK((a.y_engine - b.y_engine).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the order sweep yields a shrinking error table") {
  RunConfig cfg = tiny_burgers();
  cfg.reference = true;
  const SweepResult sweep = sweep_orders(cfg, 1);
  REQUIRE(sweep.partial_sums.size() == 2);
  REQUIRE(sweep.per_order_1d.size() == 2);
  CHECK(sweep.per_order_2d.empty());

  // Partial sums are prefixes of the full series.
  CHECK((sweep.partial_sums[0].values - sweep.report.orders[0].values)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((sweep.partial_sums[1].values - sweep.report.total.values)
            .cwiseAbs()
            .maxCoeff() <= 1e-15);

  // Adding the first correction must improve on the frozen zeroth order.
  CHECK(sweep.per_order_1d[1].rms < sweep.per_order_1d[0].rms);
  CHECK(sweep.per_order_1d[1].rel_l2 < sweep.per_order_1d[0].rel_l2);
  CHECK(sweep.report.has_reference);

  CHECK_THROWS_AS((void)sweep_orders(cfg, -1), std::invalid_argument);
}

TEST_CASE("artifact files land in the output directory") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "homlind_runner_artifacts";
  fs::remove_all(dir);

  RunConfig cfg = tiny_burgers();
  cfg.reference = true;
  cfg.out_dir = dir.string();
  const RunReport rep = run(cfg);
  for (const char* name : {"report.json", "config.txt", "diagnostics.csv",
                           "metrics.csv", "profile_lham.csv",
                           "profile_reference.csv"}) {
    CHECK_MESSAGE(fs::exists(dir / name), name);
  }

  std::ifstream in(dir / "report.json");
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["lifted_dim"].get<int>() == rep.lifted_dim);
  CHECK(j["end_to_end_rel_error"].get<double>() <= 1e-8);
  CHECK(j["metrics"].contains("eps_rms_percent"));
  CHECK(j["metrics"].contains("eps_l2_percent"));
  CHECK(j["layout"].size() == 3);

  // The sweep adds the error table and the profile dump.
  (void)sweep_orders(cfg, 1);
  CHECK(fs::exists(dir / "errors_vs_order.csv"));
  CHECK(fs::exists(dir / "profile.csv"));
  std::ifstream table(dir / "errors_vs_order.csv");
  std::string header;
  std::getline(table, header);
  CHECK(header == "m_tilde,eps_rms_percent,eps_l2_percent");
  int rows = 0;
  std::string line;
  while (std::getline(table, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
  fs::remove_all(dir);
}

TEST_CASE("a zero initial condition short-circuits to the zero solution") {
  RunConfig cfg = tiny_burgers();
  cfg.ic_u = "0";
  cfg.engine = EngineMode::LindbladFull;  // embedding is skipped anyway
  const RunReport rep = run(cfg);
  CHECK(rep.y0_norm == 0.0);
  CHECK(rep.gamma == 0.0);
  CHECK(rep.end_to_end_rel_error == 0.0);
  CHECK(rep.y_engine.cwiseAbs().maxCoeff() == 0.0);
  CHECK(rep.total.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("system assembly honours the configured truncations") {
  const LiftedSystem sys = build_system_for(tiny_burgers());
  CHECK(sys.dim() == 11);
  RunConfig bigger = tiny_burgers();
  bigger.truncation = 4;
  bigger.m_tilde = 4;
  const LiftedSystem sys4 = build_system_for(bigger);
  CHECK(sys4.dim() == 60);
  RunConfig bad = tiny_burgers();
  bad.steps = 0;
  CHECK_THROWS_AS((void)build_system_for(bad), std::invalid_argument);
}

}  // TEST_SUITE
