#pragma once

#include <string>
#include <vector>

#include "homlind/channels.hpp"
#include "homlind/hierarchy.hpp"
#include "homlind/problem.hpp"

namespace homlind {

struct BlockSlice {
  std::string name;  // "u0", "z1", "u1", ...
  int offset = 0;
  int size = 0;
};

// Single autonomous linear system y' = Ay stacking all deformation orders
// and their auxiliary forcing chains, laid out [u0 | z1 | u1 | ... | zm | um].
struct LiftedSystem {
  MatrixXcd A;
  VectorXcd y0;
  double y0_norm = 0.0;
  std::vector<BlockSlice> layout;
  int n_state = 0;  // entries per u-block (fields * modes)
  int m_tilde = 0;
  std::vector<std::vector<ForcingChannel>> channels;  // [m-1] -> order m

  int dim() const { return static_cast<int>(A.rows()); }
  const BlockSlice& slice(const std::string& name) const;
  // Offsets of the u-blocks in order 0..m_tilde.
  std::vector<int> u_offsets() const;
};

// Assemble A and y(0) from the linear rates, initial coefficients, and the
// per-order channel lists.  Auxiliary chains: a channel with power k holds
// k+1 slots with -rate on the diagonal and a unit subdiagonal; the first
// slot starts at gamma * k! and the coupling column enters from the last
// slot, so the u-block receives v * gamma * t^k exp(-rate t) exactly.
LiftedSystem assemble_lifted(
    const ProblemDef& problem, const ModeSet& ms, const CoeffVector& c0,
    const std::vector<std::vector<ForcingChannel>>& channels_per_order);

// Hierarchy + channel extraction + assembly in one call.
LiftedSystem build_lifted_system(const ProblemDef& problem, const ModeSet& ms,
                                 const CoeffVector& c0, const HamConfig& config,
                                 std::vector<DeformationLevel>* levels_out =
                                     nullptr);

// Dense-exponential evaluation y(t) = exp(At) y(0).
VectorXcd classical_solution(const LiftedSystem& sys, double t);

// Per-order u-slices of a lifted vector.
std::vector<VectorXcd> split_orders(const LiftedSystem& sys,
                                    const VectorXcd& y);
// Homotopy partial sum: sum of all u-slices.
VectorXcd sum_series(const LiftedSystem& sys, const VectorXcd& y);

}  // namespace homlind
