#pragma once

#include <cstdint>
#include <string>

#include "cyclespec/numeric.hpp"

namespace cyclespec::testing {

inline constexpr Precision kP = 128;

inline Real dec(const std::string& s, Precision prec = kP) {
  return Real(Rational::parse(s), prec);
}

inline Real delta(const CNum& a, const CNum& b) { return (a - b).abs(); }

inline Real delta(const CNum& a, const std::string& re, const std::string& im) {
  return delta(a, CNum(dec(re), dec(im)));
}

inline Real two_pow(long e) { return exp2i(e, kP); }

/// Small deterministic generator for property tests (64-bit LCG, high bits out).
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed * 2 + 1) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 11;
  }
  long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  /// p/q with q in [2, max_den], p in [1, q-1].
  Rational proper_fraction(long max_den) {
    const long q = uniform(2, max_den);
    return Rational(Integer(uniform(1, q - 1)), Integer(q));
  }

 private:
  std::uint64_t state_;
};

}  // namespace cyclespec::testing
