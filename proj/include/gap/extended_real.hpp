#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace gap {

/// Extended reals are plain doubles where +infinity is the IEEE value.
/// -infinity and NaN are rejected at construction boundaries, so sums
/// saturate at +infinity and never produce NaN.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_pos_inf(double x) noexcept { return x == kInfinity; }

/// Correctly rounded sum of `terms` (Shewchuk's non-overlapping partials,
/// the same scheme as Python's math.fsum). The result does not depend on
/// the order of the terms, which is what lets cycle costs computed along
/// different rotations or relabelings compare with exact equality.
/// Any +infinity term makes the result +infinity.
double exact_sum(std::span<const double> terms) noexcept;

/// Incremental form of exact_sum.
class ExactAccumulator {
 public:
  void add(double x) noexcept;
  double value() const noexcept;
  void clear() noexcept {
    count_ = 0;
    saw_inf_ = false;
  }

 private:
  // Non-overlapping partials of a double sum never exceed ~40 entries
  // (exponent range / mantissa width).
  static constexpr int kMaxPartials = 64;
  double partials_[kMaxPartials];
  int count_ = 0;
  bool saw_inf_ = false;
};

}  // namespace gap
