#include "homlind/lift.hpp"

#include <stdexcept>

#include "homlind/linalg.hpp"

namespace homlind {

const BlockSlice& LiftedSystem::slice(const std::string& name) const {
  for (const auto& s : layout)
    if (s.name == name) return s;
  throw std::out_of_range("no block named " + name);
}

std::vector<int> LiftedSystem::u_offsets() const {
  std::vector<int> offs;
  for (const auto& s : layout)
    if (s.name[0] == 'u') offs.push_back(s.offset);
  return offs;
}

LiftedSystem assemble_lifted(
    const ProblemDef& problem, const ModeSet& ms, const CoeffVector& c0,
    const std::vector<std::vector<ForcingChannel>>& channels_per_order) {
  LiftedSystem sys;
  sys.n_state = c0.size();
  sys.m_tilde = static_cast<int>(channels_per_order.size());
  sys.channels = channels_per_order;

  const VectorXd sigma = linear_rates(problem, ms);
  if (sigma.size() != c0.values.size())
    throw std::invalid_argument("initial coefficients do not match mode set");

  int dim = sys.n_state;
  sys.layout.push_back({"u0", 0, sys.n_state});
  for (int m = 1; m <= sys.m_tilde; ++m) {
    int zdim = 0;
    for (const auto& ch : channels_per_order[static_cast<size_t>(m - 1)])
      zdim += ch.chain_size();
    sys.layout.push_back({"z" + std::to_string(m), dim, zdim});
    dim += zdim;
    sys.layout.push_back({"u" + std::to_string(m), dim, sys.n_state});
    dim += sys.n_state;
  }

  sys.A = MatrixXcd::Zero(dim, dim);
  sys.y0 = VectorXcd::Zero(dim);

  // u0 block.
  for (int e = 0; e < sys.n_state; ++e) sys.A(e, e) = -sigma[e];
  sys.y0.head(sys.n_state) = c0.values;

  for (int m = 1; m <= sys.m_tilde; ++m) {
    const auto& chans = channels_per_order[static_cast<size_t>(m - 1)];
    const BlockSlice& z = sys.slice("z" + std::to_string(m));
    const BlockSlice& u = sys.slice("u" + std::to_string(m));
    int pos = z.offset;
    for (const auto& ch : chans) {
      if (static_cast<int>(ch.v.size()) != sys.n_state)
        throw std::invalid_argument("channel column has wrong length");
      const int w = ch.chain_size();
      double factorial = 1.0;
      for (int i = 2; i <= ch.power; ++i) factorial *= i;
      for (int i = 0; i < w; ++i) {
        sys.A(pos + i, pos + i) = -ch.rate;
        if (i > 0) sys.A(pos + i, pos + i - 1) = 1.0;
      }
      sys.y0[pos] = ch.gamma * factorial;
      // Coupling from the chain's last slot into the u-block.
      sys.A.block(u.offset, pos + w - 1, sys.n_state, 1) = ch.v;
      pos += w;
    }
    if (pos != z.offset + z.size)
      throw std::logic_error("auxiliary block layout mismatch");
    for (int e = 0; e < sys.n_state; ++e)
      sys.A(u.offset + e, u.offset + e) = -sigma[e];
  }

  sys.y0_norm = sys.y0.norm();
  return sys;
}

LiftedSystem build_lifted_system(const ProblemDef& problem, const ModeSet& ms,
                                 const CoeffVector& c0, const HamConfig& config,
                                 std::vector<DeformationLevel>* levels_out) {
  auto levels = build_hierarchy(problem, ms, c0, config);
  std::vector<std::vector<ForcingChannel>> per_order;
  for (int m = 1; m <= config.m_tilde; ++m)
    per_order.push_back(
        extract_channels(forcing(m, levels, problem, ms, config)));
  if (levels_out) *levels_out = std::move(levels);
  return assemble_lifted(problem, ms, c0, per_order);
}

VectorXcd classical_solution(const LiftedSystem& sys, double t) {
  if (t < 0.0) throw std::invalid_argument("time must be >= 0");
  if (t == 0.0) return sys.y0;
  return expm(sys.A * t) * sys.y0;
}

std::vector<VectorXcd> split_orders(const LiftedSystem& sys,
                                    const VectorXcd& y) {
  if (y.size() != sys.A.rows())
    throw std::invalid_argument("vector does not match lifted layout");
  std::vector<VectorXcd> out;
  for (const auto& s : sys.layout)
    if (s.name[0] == 'u') out.push_back(y.segment(s.offset, s.size));
  return out;
}

VectorXcd sum_series(const LiftedSystem& sys, const VectorXcd& y) {
  VectorXcd total = VectorXcd::Zero(sys.n_state);
  for (const auto& u : split_orders(sys, y)) total += u;
  return total;
}

}  // namespace homlind
