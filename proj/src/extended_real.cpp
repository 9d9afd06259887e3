#include "gap/extended_real.hpp"

#include <utility>

namespace gap {

void ExactAccumulator::add(double x) noexcept {
  if (saw_inf_) return;
  if (!std::isfinite(x)) {
    saw_inf_ = true;
    return;
  }
  int i = 0;
  for (int k = 0; k < count_; ++k) {
    double y = partials_[k];
    if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
    const double hi = x + y;
    if (!std::isfinite(hi)) {
      // Finite inputs overflowing the double range saturate.
      saw_inf_ = true;
      return;
    }
    const double lo = y - (hi - x);
    if (lo != 0.0) partials_[i++] = lo;
    x = hi;
  }
  if (i >= kMaxPartials) i = kMaxPartials - 1;  // unreachable for IEEE doubles
  partials_[i++] = x;
  count_ = i;
}

double ExactAccumulator::value() const noexcept {
  if (saw_inf_) return kInfinity;
  int n = count_;
  if (n == 0) return 0.0;
  double hi = partials_[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials_[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  // Round-half-even correction when the remaining partials push the
  // discarded tail past the halfway point.
  if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    const double yr = x - hi;
    if (y == yr) hi = x;
  }
  return hi;
}

double exact_sum(std::span<const double> terms) noexcept {
  ExactAccumulator acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

}  // namespace gap
