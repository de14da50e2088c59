#pragma once

#include <vector>

#include "homlind/expsum.hpp"

namespace homlind {

// One exponential forcing component v * gamma * t^power * exp(-rate t)
// shared across all (field, mode) entries of an order.  The coupling
// column v is normalized to unit maximum magnitude; gamma carries the
// scale.
struct ForcingChannel {
  cplx rate;
  int power = 0;
  double gamma = 0.0;  // positive scale, max |raw column|
  VectorXcd v;         // normalized coupling column, max|v| = 1

  // Auxiliary-chain width needed in the lifted system.
  int chain_size() const { return power + 1; }
};

// Group the forcing terms of one order by distinct (rate, power); columns
// with max magnitude below drop_tol are discarded.  Channels are returned
// sorted by (Re rate, Im rate, power).
std::vector<ForcingChannel> extract_channels(const std::vector<ExpSum>& f,
                                             double drop_tol = kChannelDropTol);

// Evaluate the represented forcing sum_r v_r gamma_r t^k_r exp(-rate_r t)
// entry-wise (for reconstruction checks).
VectorXcd channels_eval(const std::vector<ForcingChannel>& channels, int n,
                        double t);

}  // namespace homlind
