#pragma once

#include <string>
#include <vector>

namespace homlind {

// Integer wavevector; jy is 0 for one-dimensional problems.
struct Mode {
  int jx = 0;
  int jy = 0;

  friend bool operator==(const Mode&, const Mode&) = default;
  // Lexicographic (jx, then jy); fixes all matrix and file layouts.
  friend auto operator<=>(const Mode& a, const Mode& b) = default;
};

std::string to_string(const Mode& m);

// Full box truncation |jx|,|jy| <= J in lexicographic order.
class ModeSet {
 public:
  ModeSet() = default;  // empty set (placeholder for default-built holders)
  static ModeSet box_1d(int J);
  static ModeSet box_2d(int J);

  int dimension() const { return dimension_; }
  int truncation() const { return J_; }
  int size() const { return static_cast<int>(modes_.size()); }
  const std::vector<Mode>& modes() const { return modes_; }
  const Mode& at(int i) const { return modes_[static_cast<size_t>(i)]; }

  bool contains(const Mode& m) const;
  // Index in the lexicographic list; -1 if outside the truncation.
  int index_of(const Mode& m) const;

  friend bool operator==(const ModeSet& a, const ModeSet& b) {
    return a.dimension_ == b.dimension_ && a.J_ == b.J_;
  }

 private:
  ModeSet(int dimension, int J);
  int dimension_ = 1;
  int J_ = 0;
  std::vector<Mode> modes_;
};

}  // namespace homlind
