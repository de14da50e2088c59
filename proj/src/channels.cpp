#include "homlind/channels.hpp"

#include <algorithm>
#include <cmath>

namespace homlind {

std::vector<ForcingChannel> extract_channels(const std::vector<ExpSum>& f,
                                             double drop_tol) {
  const int n = static_cast<int>(f.size());
  std::vector<ForcingChannel> channels;
  for (int e = 0; e < n; ++e) {
    for (const ExpTerm& term : f[static_cast<size_t>(e)].terms()) {
      ForcingChannel* ch = nullptr;
      for (auto& cand : channels) {
        const double scale =
            std::max(1.0, std::max(std::abs(cand.rate), std::abs(term.rate)));
        if (cand.power == term.power &&
            std::abs(cand.rate - term.rate) <= kMergeTol * scale) {
          ch = &cand;
          break;
        }
      }
      if (!ch) {
        channels.push_back({term.rate, term.power, 0.0, VectorXcd::Zero(n)});
        ch = &channels.back();
      }
      ch->v[e] += term.amp;
    }
  }
  std::vector<ForcingChannel> kept;
  for (auto& ch : channels) {
    const double peak = ch.v.cwiseAbs().maxCoeff();
    if (peak < drop_tol) continue;
    ch.gamma = peak;
    ch.v /= peak;
    kept.push_back(std::move(ch));
  }
  std::sort(kept.begin(), kept.end(),
            [](const ForcingChannel& a, const ForcingChannel& b) {
              if (a.rate.real() != b.rate.real())
                return a.rate.real() < b.rate.real();
              if (a.rate.imag() != b.rate.imag())
                return a.rate.imag() < b.rate.imag();
              return a.power < b.power;
            });
  return kept;
}

VectorXcd channels_eval(const std::vector<ForcingChannel>& channels, int n,
                        double t) {
  VectorXcd out = VectorXcd::Zero(n);
  for (const auto& ch : channels)
    out += ch.v * (ch.gamma * std::pow(t, ch.power) * std::exp(-ch.rate * t));
  return out;
}

}  // namespace homlind
