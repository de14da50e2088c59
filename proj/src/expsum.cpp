#include "homlind/expsum.hpp"

#include <algorithm>
#include <cmath>

namespace homlind {

namespace {

bool rate_close(const cplx& a, const cplx& b) {
  double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
  return std::abs(a - b) <= kMergeTol * scale;
}

bool term_order(const ExpTerm& a, const ExpTerm& b) {
  if (a.power != b.power) return a.power < b.power;
  if (a.rate.real() != b.rate.real()) return a.rate.real() < b.rate.real();
  return a.rate.imag() < b.rate.imag();
}

}  // namespace

ExpSum::ExpSum(cplx amp, cplx rate, int power) {
  terms_.push_back({amp, rate, power});
  normalize();
}

void ExpSum::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<ExpTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().power == t.power &&
        rate_close(merged.back().rate, t.rate)) {
      merged.back().amp += t.amp;
    } else {
      merged.push_back(t);
    }
  }
  double peak = 0.0;
  for (const auto& t : merged) peak = std::max(peak, std::abs(t.amp));
  terms_.clear();
  for (const auto& t : merged)
    if (std::abs(t.amp) >= kMergeTol * peak && std::abs(t.amp) > 0.0)
      terms_.push_back(t);
}

cplx ExpSum::eval(double t) const {
  cplx acc = 0.0;
  for (const auto& term : terms_)
    acc += term.amp * std::pow(t, term.power) * std::exp(-term.rate * t);
  return acc;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  for (const auto& t : o.terms_) terms_.push_back({-t.amp, t.rate, t.power});
  normalize();
  return *this;
}

ExpSum ExpSum::operator*(const ExpSum& o) const {
  ExpSum out;
  out.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      out.terms_.push_back({a.amp * b.amp, a.rate + b.rate, a.power + b.power});
  out.normalize();
  return out;
}

ExpSum ExpSum::operator*(cplx s) const {
  ExpSum out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.amp *= s;
  out.normalize();
  return out;
}

ExpSum ExpSum::derivative() const {
  ExpSum out;
  for (const auto& t : terms_) {
    if (t.power > 0)
      out.terms_.push_back(
          {t.amp * static_cast<double>(t.power), t.rate, t.power - 1});
    out.terms_.push_back({-t.amp * t.rate, t.rate, t.power});
  }
  out.normalize();
  return out;
}

ExpSum ExpSum::shift_rate(cplx delta) const {
  ExpSum out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.rate += delta;
  out.normalize();
  return out;
}

double ExpSum::max_abs_amp() const {
  double peak = 0.0;
  for (const auto& t : terms_) peak = std::max(peak, std::abs(t.amp));
  return peak;
}

}  // namespace homlind
