#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "homlind/problem.hpp"
#include "test_util.hpp"

using namespace homlind;
using test::make_rng;
using test::rand_cplx;

namespace {

constexpr double kPi = std::numbers::pi;

// Evaluate the (dx, dy)-th partial derivative of the trigonometric
// polynomial with the given coefficients at (x, y) by direct summation.
cplx eval_field(const ModeSet& ms, const CoeffVector& c, int field, double x,
                double y, int dx = 0, int dy = 0) {
  cplx out(0.0, 0.0);
  for (int i = 0; i < ms.size(); ++i) {
    const Mode m = ms.at(i);
    cplx factor(1.0, 0.0);
    for (int k = 0; k < dx; ++k) factor *= cplx(0.0, m.jx);
    for (int k = 0; k < dy; ++k) factor *= cplx(0.0, m.jy);
    out += factor * c.at(field, i) *
           std::exp(cplx(0.0, m.jx * x + m.jy * y));
  }
  return out;
}

// Exact Fourier projection of grid samples (trapezoid rule on a periodic
// grid; exact for trigonometric polynomials resolved by the grid).
cplx project_mode_1d(const std::vector<cplx>& g, int j) {
  const int n = static_cast<int>(g.size());
  cplx acc(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = 2.0 * kPi * i / n;
    acc += g[static_cast<size_t>(i)] * std::exp(cplx(0.0, -j * x));
  }
  return acc / static_cast<double>(n);
}

CoeffVector random_coeffs(std::mt19937_64& g, const ModeSet& ms, int fields) {
  CoeffVector c(ms, fields);
  for (int i = 0; i < c.size(); ++i) c.values[i] = rand_cplx(g);
  return c;
}

CoeffVector random_symmetric_coeffs(std::mt19937_64& g, const ModeSet& ms,
                                    int fields) {
  CoeffVector c(ms, fields);
  for (int f = 0; f < fields; ++f) {
    for (int i = 0; i < ms.size(); ++i) {
      const Mode m = ms.at(i);
      const int im = ms.index_of({-m.jx, -m.jy});
      if (m.jx < 0 || (m.jx == 0 && m.jy < 0)) continue;
      const cplx v = (m.jx == 0 && m.jy == 0) ? cplx(rand_cplx(g).real(), 0.0)
                                              : rand_cplx(g);
      c.at(f, i) = v;
      c.at(f, im) = std::conj(v);
    }
  }
  return c;
}

}  // namespace

TEST_SUITE("problem") {

TEST_CASE("linear rates are diffusive per field") {
  const ProblemDef pb{ProblemKind::Burgers, 0.05, 0.0};
  const ModeSet ms1 = pb.make_modes(3);
  const VectorXd sb = linear_rates(pb, ms1);
  REQUIRE(sb.size() == 7);
  for (int i = 0; i < 7; ++i) {
    const int j = ms1.at(i).jx;
    CHECK(sb[i] == doctest::Approx(0.05 * j * j).epsilon(1e-15));
  }

  const ProblemDef pm{ProblemKind::ReducedMHD, 0.05, 0.03};
  const ModeSet ms2 = pm.make_modes(1);
  const VectorXd sm = linear_rates(pm, ms2);
  REQUIRE(sm.size() == 18);
  for (int i = 0; i < 9; ++i) {
    const Mode m = ms2.at(i);
    const double k2 = m.jx * m.jx + m.jy * m.jy;
    CHECK(sm[i] == doctest::Approx(0.05 * k2).epsilon(1e-15));
    CHECK(sm[9 + i] == doctest::Approx(0.03 * k2).epsilon(1e-15));
  }
}

TEST_CASE("linear matrix is minus the diagonal of the rates") {
  const ProblemDef p{ProblemKind::Burgers, 0.1, 0.0};
  const ModeSet ms = p.make_modes(2);
  const MatrixXcd M = linear_matrix(p, ms);
  const VectorXd s = linear_rates(p, ms);
  REQUIRE(M.rows() == s.size());
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      const cplx expect = (i == j) ? cplx(-s[i], 0.0) : cplx(0.0, 0.0);
      CHECK(std::abs(M(i, j) - expect) == 0.0);
    }
  }
}

TEST_CASE("projection of sin x gives the -i/2, +i/2 pair") {
  const ProblemDef p{ProblemKind::Burgers, 0.05, 0.0};
  const ModeSet ms = p.make_modes(4);
  const CoeffVector c =
      project_initial(p, ms, {ICSpec::parse("sin(x)", 1)});
  for (int i = 0; i < ms.size(); ++i) {
    const int j = ms.at(i).jx;
    cplx expect(0.0, 0.0);
    if (j == 1) expect = cplx(0.0, -0.5);
    if (j == -1) expect = cplx(0.0, 0.5);
    CHECK(std::abs(c.at(0, i) - expect) == 0.0);
  }
  CHECK(c.conjugate_symmetry_defect() <= 1e-15);
}

TEST_CASE("projection of the two-field harmonics matches closed values") {
  const ProblemDef p{ProblemKind::ReducedMHD, 0.05, 0.03};
  const ModeSet ms = p.make_modes(1);
  const CoeffVector c = project_initial(
      p, ms,
      {ICSpec::parse("sin(x) + 0.5*sin(x-y)", 2),
       ICSpec::parse("cos(y) + 0.25*cos(x+y)", 2)});
  auto at = [&](int f, int jx, int jy) { return c.at(f, ms.index_of({jx, jy})); };
  CHECK(std::abs(at(0, 1, 0) - cplx(0.0, -0.5)) == 0.0);
  CHECK(std::abs(at(0, -1, 0) - cplx(0.0, 0.5)) == 0.0);
  CHECK(std::abs(at(0, 1, -1) - cplx(0.0, -0.25)) == 0.0);
  CHECK(std::abs(at(0, -1, 1) - cplx(0.0, 0.25)) == 0.0);
  CHECK(std::abs(at(1, 0, 1) - cplx(0.5, 0.0)) == 0.0);
  CHECK(std::abs(at(1, 0, -1) - cplx(0.5, 0.0)) == 0.0);
  CHECK(std::abs(at(1, 1, 1) - cplx(0.125, 0.0)) == 0.0);
  CHECK(std::abs(at(1, -1, -1) - cplx(0.125, 0.0)) == 0.0);
  CHECK(c.conjugate_symmetry_defect() <= 1e-15);
}

TEST_CASE("projection rejects wavevectors beyond the truncation") {
  const ProblemDef p{ProblemKind::Burgers, 0.05, 0.0};
  const ModeSet ms = p.make_modes(2);
  CHECK_THROWS_AS(
      (void)project_initial(p, ms, {ICSpec::parse("sin(3x)", 1)}),
      std::invalid_argument);
  CHECK_THROWS_AS((void)project_initial(p, ms, {}), std::invalid_argument);
}

TEST_CASE("coefficient storage is field-major") {
  const ModeSet ms = ModeSet::box_2d(1);
  CoeffVector c(ms, 2);
  c.at(1, 3) = cplx(2.0, -1.0);
  CHECK(c.values[9 + 3] == cplx(2.0, -1.0));
  CHECK(c.size() == 18);
  const CoeffVector empty;
  CHECK(empty.size() == 0);
}

TEST_CASE("advection convolution equals the grid product for sin x") {
  const ProblemDef p{ProblemKind::Burgers, 0.05, 0.0};
  const ModeSet ms = p.make_modes(4);
  const CoeffVector c0 = project_initial(p, ms, {ICSpec::parse("sin(x)", 1)});
  const CoeffVector n = burgers_nonlinear(c0, c0);
  for (int i = 0; i < ms.size(); ++i) {
    const int j = ms.at(i).jx;
    cplx expect(0.0, 0.0);
    if (j == 2) expect = cplx(0.0, 0.25);
    if (j == -2) expect = cplx(0.0, -0.25);
    CHECK(std::abs(n.at(0, i) - expect) <= 1e-16);
  }
}

TEST_CASE("advection convolution matches pointwise -a b_x for random data") {
  auto g = make_rng(101);
  const ProblemDef p{ProblemKind::Burgers, 0.05, 0.0};
  const ModeSet ms = p.make_modes(4);
  const int NG = 32;
  for (int rep = 0; rep < 4; ++rep) {
    const CoeffVector a = random_coeffs(g, ms, 1);
    const CoeffVector b = random_coeffs(g, ms, 1);
    const CoeffVector n = burgers_nonlinear(a, b);
    std::vector<cplx> grid(NG);
    for (int i = 0; i < NG; ++i) {
      const double x = 2.0 * kPi * i / NG;
      grid[static_cast<size_t>(i)] =
          -eval_field(ms, a, 0, x, 0.0) * eval_field(ms, b, 0, x, 0.0, 1);
    }
    for (int i = 0; i < ms.size(); ++i) {
      const cplx expect = project_mode_1d(grid, ms.at(i).jx);
      CHECK(std::abs(n.at(0, i) - expect) <= 1e-12);
    }
  }
}

TEST_CASE("bracket convolutions match the pointwise brackets for random data") {
  auto g = make_rng(202);
  const ProblemDef p{ProblemKind::ReducedMHD, 0.05, 0.03};
  const ModeSet ms = p.make_modes(1);
  const int NG = 8;
  for (int rep = 0; rep < 4; ++rep) {
    const CoeffVector a = random_coeffs(g, ms, 2);
    const CoeffVector b = random_coeffs(g, ms, 2);
    const CoeffVector n = mhd_nonlinear(a, b);

    // Stream function of a's vorticity block and current of b's flux block.
    CoeffVector phi(ms, 1), zeta(ms, 1), xia(ms, 1), omb(ms, 1), xib(ms, 1);
    for (int i = 0; i < ms.size(); ++i) {
      const Mode m = ms.at(i);
      const double k2 = m.jx * m.jx + m.jy * m.jy;
      phi.at(0, i) = (k2 > 0) ? -a.at(0, i) / k2 : cplx(0.0, 0.0);
      zeta.at(0, i) = k2 * b.at(1, i);
      xia.at(0, i) = a.at(1, i);
      omb.at(0, i) = b.at(0, i);
      xib.at(0, i) = b.at(1, i);
    }

    auto bracket = [&](const CoeffVector& f, const CoeffVector& h, double x,
                       double y) {
      return eval_field(ms, f, 0, x, y, 1, 0) * eval_field(ms, h, 0, x, y, 0, 1) -
             eval_field(ms, f, 0, x, y, 0, 1) * eval_field(ms, h, 0, x, y, 1, 0);
    };

    // Convolution convention: the coefficient sums with kernel
    // K(p, q) = p_x q_y - p_y q_x correspond to minus the pointwise bracket.
    for (int i = 0; i < ms.size(); ++i) {
      const Mode m = ms.at(i);
      cplx acc_w(0.0, 0.0), acc_x(0.0, 0.0);
      for (int gi = 0; gi < NG; ++gi) {
        for (int gj = 0; gj < NG; ++gj) {
          const double x = 2.0 * kPi * gi / NG;
          const double y = 2.0 * kPi * gj / NG;
          const cplx gw = -bracket(phi, omb, x, y) + bracket(xia, zeta, x, y);
          const cplx gx = -bracket(phi, xib, x, y);
          const cplx ph = std::exp(cplx(0.0, -(m.jx * x + m.jy * y)));
          acc_w += gw * ph;
          acc_x += gx * ph;
        }
      }
      acc_w /= static_cast<double>(NG) * NG;
      acc_x /= static_cast<double>(NG) * NG;
      CHECK(std::abs(n.at(0, i) - acc_w) <= 1e-12);
      CHECK(std::abs(n.at(1, i) - acc_x) <= 1e-12);
    }
  }
}

TEST_CASE("convolutions are bilinear") {
  auto g = make_rng(303);
  for (ProblemKind kind : {ProblemKind::Burgers, ProblemKind::ReducedMHD}) {
    const ProblemDef p{kind, 0.05, 0.03};
    const ModeSet ms = p.make_modes(kind == ProblemKind::Burgers ? 3 : 1);
    const int fields = p.fields();
    const CoeffVector a = random_coeffs(g, ms, fields);
    const CoeffVector b = random_coeffs(g, ms, fields);
    const CoeffVector c = random_coeffs(g, ms, fields);
    const cplx al = rand_cplx(g), be = rand_cplx(g);

    CoeffVector lhs_in(ms, fields);
    lhs_in.values = al * a.values + be * b.values;
    auto N = [&](const CoeffVector& u, const CoeffVector& v) {
      return kind == ProblemKind::Burgers ? burgers_nonlinear(u, v)
                                          : mhd_nonlinear(u, v);
    };
    const CoeffVector left = N(lhs_in, c);
    const VectorXcd right = al * N(a, c).values + be * N(b, c).values;
    CHECK((left.values - right).cwiseAbs().maxCoeff() <= 1e-12);

    const CoeffVector left2 = N(c, lhs_in);
    const VectorXcd right2 = al * N(c, a).values + be * N(c, b).values;
    CHECK((left2.values - right2).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("convolutions preserve the real-field symmetry") {
  auto g = make_rng(404);
  for (ProblemKind kind : {ProblemKind::Burgers, ProblemKind::ReducedMHD}) {
    const ProblemDef p{kind, 0.05, 0.03};
    const ModeSet ms = p.make_modes(kind == ProblemKind::Burgers ? 4 : 1);
    const CoeffVector a = random_symmetric_coeffs(g, ms, p.fields());
    const CoeffVector b = random_symmetric_coeffs(g, ms, p.fields());
    REQUIRE(a.conjugate_symmetry_defect() <= 1e-15);
    const CoeffVector n = kind == ProblemKind::Burgers
                              ? burgers_nonlinear(a, b)
                              : mhd_nonlinear(a, b);
    CHECK(n.conjugate_symmetry_defect() <= 1e-13);
  }
}

TEST_CASE("convolution rejects mismatched mode sets") {
  const ProblemDef p{ProblemKind::Burgers, 0.05, 0.0};
  const CoeffVector a(p.make_modes(2), 1);
  const CoeffVector b(p.make_modes(3), 1);
  CHECK_THROWS_AS((void)burgers_nonlinear(a, b), std::invalid_argument);
}

TEST_CASE("problem validation rejects non-positive dissipation") {
  ProblemDef p{ProblemKind::Burgers, 0.0, 0.0};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.nu = 0.05;
  CHECK_NOTHROW(p.validate());
  ProblemDef m{ProblemKind::ReducedMHD, 0.05, 0.0};
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.eta = 0.03;
  CHECK_NOTHROW(m.validate());
}

}  // TEST_SUITE
