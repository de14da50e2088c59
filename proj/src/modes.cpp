#include "homlind/modes.hpp"

#include <stdexcept>

namespace homlind {

std::string to_string(const Mode& m) {
  return "(" + std::to_string(m.jx) + "," + std::to_string(m.jy) + ")";
}

ModeSet::ModeSet(int dimension, int J) : dimension_(dimension), J_(J) {
  if (J < 0) throw std::invalid_argument("truncation must be non-negative");
  if (dimension == 1) {
    modes_.reserve(static_cast<size_t>(2 * J + 1));
    for (int jx = -J; jx <= J; ++jx) modes_.push_back({jx, 0});
  } else if (dimension == 2) {
    modes_.reserve(static_cast<size_t>((2 * J + 1) * (2 * J + 1)));
    for (int jx = -J; jx <= J; ++jx)
      for (int jy = -J; jy <= J; ++jy) modes_.push_back({jx, jy});
  } else {
    throw std::invalid_argument("dimension must be 1 or 2");
  }
}

ModeSet ModeSet::box_1d(int J) { return ModeSet(1, J); }
ModeSet ModeSet::box_2d(int J) { return ModeSet(2, J); }

bool ModeSet::contains(const Mode& m) const {
  if (dimension_ == 1 && m.jy != 0) return false;
  return std::abs(m.jx) <= J_ && std::abs(m.jy) <= J_;
}

int ModeSet::index_of(const Mode& m) const {
  if (!contains(m)) return -1;
  if (dimension_ == 1) return m.jx + J_;
  return (m.jx + J_) * (2 * J_ + 1) + (m.jy + J_);
}

}  // namespace homlind
