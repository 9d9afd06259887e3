#include "gap/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gap/error.hpp"

namespace gap {

BigNat factorial(std::size_t k) {
  BigNat f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

Rank::Rank(BigNat value, std::size_t n) : value_(std::move(value)), n_(n) {
  if (n < 2) throw Error(ErrorCode::RankOutOfRange, "n must be at least 2");
  if (value_ < 1 || value_ > cycle_count(n)) {
    throw Error(ErrorCode::RankOutOfRange, "rank " + value_.str() + " outside [1, " + cycle_count(n).str() + "]");
  }
}

namespace {

// Factorial-base digit extraction shared by the 64-bit and big-int paths.
template <typename Int>
std::vector<Vertex> unrank_digits(Int ja, std::size_t n) {
  std::vector<Vertex> remaining(n - 1);  // n-1, ..., 1
  for (std::size_t i = 0; i < n - 1; ++i) remaining[i] = static_cast<Vertex>(n - 1 - i);

  std::vector<Vertex> y;
  y.reserve(n + 1);
  y.push_back(static_cast<Vertex>(n));
  if (n == 2) {
    y.push_back(1);
    y.push_back(2);
    return y;
  }
  Int d = 1;  // (n-2)!
  for (std::size_t i = 2; i <= n - 2; ++i) d *= static_cast<unsigned>(i);
  for (std::size_t k = 1; k + 2 < n; ++k) {
    const Int r = ja / d;
    ja = ja % d;
    const auto idx = static_cast<std::size_t>(r);
    y.push_back(remaining[idx]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    d /= static_cast<unsigned>(n - k - 1);
  }
  // Two vertices left; the leftover index picks their order.
  if (ja == 0) {
    y.push_back(remaining[0]);
    y.push_back(remaining[1]);
  } else {
    y.push_back(remaining[1]);
    y.push_back(remaining[0]);
  }
  y.push_back(static_cast<Vertex>(n));
  return y;
}

constexpr std::size_t kMaxSmallN = 21;  // 20! < 2^63

}  // namespace

Cycle unrank(const BigNat& j, std::size_t n) {
  const Rank checked(j, n);
  if (n <= kMaxSmallN) {
    return Cycle::from_vertices(unrank_digits<std::uint64_t>(static_cast<std::uint64_t>(j - 1), n));
  }
  return Cycle::from_vertices(unrank_digits<BigNat>(j - 1, n));
}

Rank rank(const Cycle& y) {
  const std::size_t n = y.n();
  if (y.front() != static_cast<Vertex>(n)) {
    throw Error(ErrorCode::NotAnchoredAtN, "cycle must start at vertex " + std::to_string(n));
  }
  if (n == 2) return Rank(1, 2);
  std::vector<Vertex> remaining(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) remaining[i] = static_cast<Vertex>(n - 1 - i);
  BigNat acc = 0;
  BigNat d = factorial(n - 2);
  for (std::size_t k = 1; k + 2 < n; ++k) {
    const auto it = std::find(remaining.begin(), remaining.end(), y[k]);
    acc += d * static_cast<unsigned>(it - remaining.begin());
    remaining.erase(it);
    d /= static_cast<unsigned>(n - k - 1);
  }
  if (y[n - 2] != remaining[0]) acc += 1;
  return Rank(acc + 1, n);
}

CycleEnumerator::CycleEnumerator(std::size_t n) : CycleEnumerator(n, 1, cycle_count(n)) {}

CycleEnumerator::CycleEnumerator(std::size_t n, const BigNat& lo, const BigNat& hi) : n_(n) {
  const Rank first(lo, n);
  const Rank last(hi, n);
  if (lo > hi) throw Error(ErrorCode::RankOutOfRange, "empty rank range");
  const BigNat count = hi - lo + 1;
  remaining_ = count > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                  : static_cast<std::uint64_t>(count);
  const Cycle start = unrank(lo, n);
  buffer_.assign(start.vertices().begin(), start.vertices().end());
}

bool CycleEnumerator::next() {
  if (remaining_ == 0) return false;
  if (started_) {
    // Ascending rank == interior stepping down lexicographically.
    if (!std::prev_permutation(buffer_.begin() + 1, buffer_.end() - 1)) {
      remaining_ = 0;
      return false;
    }
    ++offset_;
  }
  started_ = true;
  --remaining_;
  return true;
}

std::vector<Cycle> enumerate_all(std::size_t n) {
  std::vector<Cycle> out;
  CycleEnumerator e(n);
  while (e.next()) out.push_back(e.current_cycle());
  return out;
}

std::size_t shared_edges(std::span<const Vertex> succ_a, std::span<const Vertex> succ_b) {
  if (succ_a.size() != succ_b.size()) throw Error(ErrorCode::SizeMismatch, "cycles of different size");
  std::size_t count = 0;
  for (std::size_t v = 0; v < succ_a.size(); ++v) count += succ_a[v] == succ_b[v] ? 1 : 0;
  return count;
}

std::size_t shared_edges(const Cycle& a, const Cycle& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "cycles of different size");
  return shared_edges(a.successors(), b.successors());
}

std::vector<std::uint64_t> coincidence_histogram(std::size_t n, const Cycle& ref, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap));
  }
  ref.require_size(n);
  const std::vector<Vertex> ref_succ = ref.successors();
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<Vertex> succ(n);
  CycleEnumerator e(n);
  while (e.next()) {
    const auto y = e.current();
    std::size_t shared = 0;
    for (std::size_t k = 0; k < n; ++k) shared += ref_succ[static_cast<std::size_t>(y[k] - 1)] == y[k + 1] ? 1 : 0;
    ++hist[shared];
  }
  return hist;
}

}  // namespace gap
