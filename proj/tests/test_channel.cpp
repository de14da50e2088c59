#include <doctest.h>

#include <cmath>
#include <vector>

#include "homlind/channel.hpp"
#include "homlind/linalg.hpp"
#include "homlind/readout.hpp"
#include "test_util.hpp"

using namespace homlind;
using test::make_rng;
using test::max_abs_diff;
using test::rand_matrix;

namespace {

MatrixXcd frozen_generator() {
  MatrixXcd A(3, 3);
  A << cplx(-0.30, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0),
      cplx(0.40, -0.20), cplx(-0.10, 0.0), cplx(0.0, 0.0),
      cplx(-0.15, 0.0), cplx(0.25, 0.10), cplx(-0.50, 0.0);
  return A;
}

VectorXcd frozen_start() {
  VectorXcd y0(3);
  y0 << cplx(0.80, 0.0), cplx(-0.30, 0.10), cplx(0.20, -0.40);
  return y0;
}

// Random stable generator: strictly negative Hermitian part.
MatrixXcd random_stable(std::mt19937_64& g, int n) {
  MatrixXcd A = rand_matrix(g, n, n);
  A -= (1.2 * n) * MatrixXcd::Identity(n, n);
  return 0.3 * A;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("frozen three-mode flow is recovered through the density pipeline") {
  const MatrixXcd A = frozen_generator();
  const VectorXcd y0 = frozen_start();
  const double dt = 0.05;
  const int nsteps = 10;
  const LindbladEmbedding emb = split_and_shift(A);
  const StepChannel ch = build_channel(emb, dt);

  std::vector<StepDiagnostics> diag;
  const DensityState st =
      evolve(ch, init_density(y0), nsteps, Realization::Superop, &diag);
  REQUIRE(static_cast<int>(diag.size()) == nsteps);
  for (const auto& d : diag) {
    CHECK(std::abs(d.trace - 1.0) <= 1e-10);
    CHECK(d.min_eigenvalue >= -1e-10);
  }

  const VectorXcd yhat = y0 / y0.norm();
  const VectorXcd y =
      recover(readout_direct(st, yhat), emb.gamma, dt * nsteps, y0.norm());
  VectorXcd frozen(3);
  frozen << cplx(0.68856638114004631, 0.0),
      cplx(-0.14053451042916423, 0.022705783989546438),
      cplx(0.080311859964764948, -0.31453709671862867);
  CHECK((y - frozen).cwiseAbs().maxCoeff() <= 1e-9);
  const VectorXcd target = expm(A * (dt * nsteps)) * y0;
  CHECK((y - target).norm() <= 1e-10 * target.norm());
}

TEST_CASE("frozen three-mode channel carries the expected certificates") {
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  StepChannel ch = build_channel(emb, 0.05);
  CHECK(ch.D == 3);
  CHECK(ch.trace_defect <= 1e-10);
  CHECK(ch.choi_min_eig >= -1e-10);
  CHECK(ch.completeness_residual <= 1e-10);
  CHECK(ch.kraus_rank() >= 6);
  CHECK(ch.kraus_rank() <= 10);
  CHECK(ch.r11_factor == doctest::Approx(1.0).epsilon(1e-10));
  const StinespringData& sd = build_stinespring(ch);
  CHECK(sd.isometry_residual <= 1e-10);
  CHECK(max_abs_diff(MatrixXcd(sd.V.adjoint() * sd.V),
                     MatrixXcd(MatrixXcd::Identity(6, 6))) <= 1e-10);
}

TEST_CASE("all three realizations produce the same state") {
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  StepChannel ch = build_channel(emb, 0.05);
  build_stinespring(ch);
  const DensityState st0 = init_density(frozen_start());
  const DensityState a = evolve(ch, st0, 10, Realization::Superop);
  const DensityState b = evolve(ch, st0, 10, Realization::Kraus);
  const DensityState c = evolve(ch, st0, 10, Realization::Stinespring);
  CHECK(max_abs_diff(a.full(), b.full()) <= 1e-9);
  CHECK(max_abs_diff(a.full(), c.full()) <= 1e-9);
  CHECK(max_abs_diff(b.full(), c.full()) <= 1e-9);
}

TEST_CASE("stinespring application requires the attached dilation") {
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  const StepChannel ch = build_channel(emb, 0.05);  // no dilation attached
  const DensityState st0 = init_density(frozen_start());
  CHECK_THROWS_AS((void)apply_step(ch, st0, Realization::Stinespring),
                  std::exception);
}

TEST_CASE("sector action agrees with the dense full-space superoperator") {
  auto g = make_rng(99);
  const int D = 4;
  const MatrixXcd A = random_stable(g, D);
  const double dt = 0.07;
  const LindbladEmbedding emb = split_and_shift(A);
  const StepChannel ch = build_channel(emb, dt);

  const MatrixXcd Efull = dense_superop_from_embedding(emb, dt);
  CHECK(max_abs_diff(ch.dense_superop(), Efull) <= 1e-10);

  const MatrixXcd rho = test::rand_density(g, 2 * D);
  const DensityState stepped =
      apply_step(ch, DensityState::from_full(rho), Realization::Superop);
  const MatrixXcd direct = unvec(Efull * vec(rho), 2 * D);
  CHECK(max_abs_diff(stepped.full(), direct) <= 1e-10);
}

TEST_CASE("vec and unvec use column stacking") {
  MatrixXcd M(2, 2);
  M << cplx(1.0, 0.0), cplx(3.0, 0.0), cplx(2.0, 0.0), cplx(4.0, 0.0);
  const VectorXcd v = vec(M);
  CHECK(v[0] == cplx(1.0, 0.0));
  CHECK(v[1] == cplx(2.0, 0.0));
  CHECK(v[2] == cplx(3.0, 0.0));
  CHECK(v[3] == cplx(4.0, 0.0));
  CHECK(max_abs_diff(unvec(v, 2), M) == 0.0);
}

TEST_CASE("pure decay: coherence damps, populations freeze") {
  // One-dimensional generator A = [-kappa]: the embedding has zero
  // Hamiltonian, jump amplitude sqrt(2 kappa).  The 01-coherence decays
  // with e^{-kappa t}; both diagonal sectors are stationary.
  const double kappa = 0.35;
  MatrixXcd A(1, 1);
  A(0, 0) = cplx(-kappa, 0.0);
  const LindbladEmbedding emb = split_and_shift(A);
  CHECK(emb.gamma <= 1e-12);  // already dissipative: no shift needed
  const double dt = 0.2;
  const StepChannel ch = build_channel(emb, dt);

  DensityState st;
  st.r00 = MatrixXcd::Constant(1, 1, cplx(0.6, 0.0));
  st.r01 = MatrixXcd::Constant(1, 1, cplx(0.25, 0.15));
  st.r11 = MatrixXcd::Constant(1, 1, cplx(0.4, 0.0));
  const int nsteps = 5;
  const DensityState out = evolve(ch, st, nsteps, Realization::Superop);
  const double T = dt * nsteps;
  // gamma is a hair above zero (norm regularization), so fold it in.
  const cplx expect01 =
      st.r01(0, 0) * std::exp(-(kappa + emb.gamma) * T);
  CHECK(std::abs(out.r00(0, 0) - st.r00(0, 0)) <= 1e-12);
  CHECK(std::abs(out.r11(0, 0) - st.r11(0, 0)) <= 1e-12);
  CHECK(std::abs(out.r01(0, 0) - expect01) <= 1e-12);
}

TEST_CASE("channel blocks exponentiate the generator") {
  // Eblk must equal exp(At dt) and the 00-superoperator must fix the
  // identity direction of a unitary-free single-mode flow.
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  const double dt = 0.05;
  const StepChannel ch = build_channel(emb, dt);
  CHECK(max_abs_diff(ch.Eblk, expm(emb.Atilde * dt)) <= 1e-12);
  // Trace preservation of the 00-superoperator: vec(I)^T E00 = vec(I)^T.
  const int D = ch.D;
  const VectorXcd vid = vec(MatrixXcd::Identity(D, D));
  const VectorXcd lhs = ch.E00.adjoint() * vid;
  CHECK((lhs - vid).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("kraus operators rebuild the superoperator") {
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  StepChannel ch = build_channel(emb, 0.05);
  const auto kraus = ch.kraus_full();
  REQUIRE(!kraus.empty());
  const int n = 2 * ch.D;
  MatrixXcd rebuilt = MatrixXcd::Zero(n * n, n * n);
  for (const auto& K : kraus) {
    // Column-stacking: vec(K rho K*) = (conj(K) (x) K) vec(rho).
    MatrixXcd kron = MatrixXcd::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        kron.block(i * n, j * n, n, n) = std::conj(K(i, j)) * K;
    rebuilt += kron;
  }
  CHECK(max_abs_diff(rebuilt, ch.dense_superop()) <= 1e-9);
}

TEST_CASE("evolution with zero steps is the identity") {
  const LindbladEmbedding emb = split_and_shift(frozen_generator());
  const StepChannel ch = build_channel(emb, 0.05);
  const DensityState st0 = init_density(frozen_start());
  const DensityState out = evolve(ch, st0, 0, Realization::Superop);
  CHECK(max_abs_diff(out.full(), st0.full()) == 0.0);
  CHECK_THROWS_AS((void)evolve(ch, st0, -1, Realization::Superop),
                  std::invalid_argument);
}

}  // TEST_SUITE
