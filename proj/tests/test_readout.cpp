#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "homlind/readout.hpp"
#include "test_util.hpp"

using namespace homlind;
using test::make_rng;
using test::max_abs_diff;
using test::rand_vector;

TEST_SUITE("readout") {

TEST_CASE("read_block extracts the upper-right ancilla block") {
  auto g = make_rng(123);
  const MatrixXcd rho = test::rand_density(g, 10);  // D = 5
  const DensityState st = DensityState::from_full(rho);
  const MatrixXcd blk = read_block(st);
  CHECK(max_abs_diff(blk, MatrixXcd(rho.topRightCorner(5, 5))) == 0.0);
}

TEST_CASE("the Pauli route reproduces the block exactly") {
  auto g = make_rng(124);
  const MatrixXcd rho = test::rand_density(g, 12);  // D = 6
  const DensityState st = DensityState::from_full(rho);
  const MatrixXcd via = read_block_via_paulis(rho);
  CHECK(max_abs_diff(via, read_block(st)) <= 1e-14);
}

TEST_CASE("observable components equal twice the block action") {
  auto g = make_rng(125);
  const int D = 7;
  const MatrixXcd rho = test::rand_density(g, 2 * D);
  const DensityState st = DensityState::from_full(rho);
  VectorXcd yhat = rand_vector(g, D);
  yhat /= yhat.norm();
  const VectorXcd direct = readout_direct(st, yhat);
  const VectorXcd expect = 2.0 * (st.r01 * yhat);
  CHECK((direct - expect).cwiseAbs().maxCoeff() <= 1e-14);
  for (int j = 0; j < D; ++j) {
    CHECK(std::abs(readout_component(st, yhat, j) - direct[j]) <= 1e-12);
  }
}

TEST_CASE("observable route validates its inputs") {
  auto g = make_rng(126);
  const int D = 4;
  const MatrixXcd rho = test::rand_density(g, 2 * D);
  const DensityState st = DensityState::from_full(rho);
  VectorXcd yhat = rand_vector(g, D);
  yhat /= yhat.norm();
  // Observables model unit-norm probes only; anything else is rejected.
  CHECK_THROWS_AS((void)readout_component(st, VectorXcd(2.7 * yhat), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)readout_component(st, yhat, -1), std::out_of_range);
  CHECK_THROWS_AS((void)readout_component(st, yhat, D), std::out_of_range);
  CHECK_THROWS_AS((void)readout_component(st, rand_vector(g, D + 1), 0),
                  std::invalid_argument);
}

TEST_CASE("recovery rescales by the exponential of the shift") {
  VectorXcd yt(2);
  yt << cplx(0.3, -0.1), cplx(-0.05, 0.2);
  const double gamma = 0.8, T = 0.5, norm = 2.5;
  const VectorXcd y = recover(yt, gamma, T, norm);
  const double scale = std::exp(gamma * T) * norm;
  CHECK((y - scale * yt).cwiseAbs().maxCoeff() <= 1e-15);

  // Zero shift and unit norm are the identity.
  const VectorXcd same = recover(yt, 0.0, 1.0, 1.0);
  CHECK((same - yt).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("recovery refuses an overflowing rescale") {
  VectorXcd yt = VectorXcd::Ones(1);
  CHECK_THROWS_AS((void)recover(yt, 800.0, 1.0, 1.0), std::exception);
  CHECK_THROWS_AS((void)recover(yt, 1.0, 800.0, 1.0), std::exception);
  CHECK_NOTHROW((void)recover(yt, 1.0, 1.0, 1.0));
}

}  // TEST_SUITE
