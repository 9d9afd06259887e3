#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gap/cycle.hpp"

namespace gap {

/// Arbitrary-precision natural; (n-1)! leaves 64 bits at n = 22.
using BigNat = boost::multiprecision::cpp_int;

BigNat factorial(std::size_t k);

/// Number of complete cycles on n vertices, (n-1)!.
inline BigNat cycle_count(std::size_t n) { return factorial(n - 1); }

/// 1-based position of a cycle in the descending enumeration anchored at n:
/// rank 1 is (n, n-1, ..., 1, n), rank (n-1)! is (n, 1, 2, ..., n-1, n).
class Rank {
 public:
  /// Throws RankOutOfRange unless 1 <= value <= (n-1)!.
  Rank(BigNat value, std::size_t n);

  const BigNat& value() const noexcept { return value_; }
  std::size_t n() const noexcept { return n_; }

  friend bool operator==(const Rank&, const Rank&) = default;

 private:
  BigNat value_;
  std::size_t n_;
};

/// The j-th cycle of the descending enumeration (factorial-base digits over
/// the shrinking list n-1, ..., 1; the last two vertices come from the
/// parity of the remaining index). Throws RankOutOfRange.
Cycle unrank(const BigNat& j, std::size_t n);
inline Cycle unrank(const Rank& j) { return unrank(j.value(), j.n()); }

/// Inverse of unrank. Throws NotAnchoredAtN if y does not start at n.
Rank rank(const Cycle& y);

/// Walks ranks lo..hi (inclusive) in ascending order. Each step is an
/// in-place successor (the interior is stepped to its lexicographic
/// predecessor), so iteration costs O(n) amortized with no big-int work.
class CycleEnumerator {
 public:
  /// Full range 1..(n-1)!.
  explicit CycleEnumerator(std::size_t n);
  /// Sub-range; throws RankOutOfRange if lo > hi or either bound is invalid.
  CycleEnumerator(std::size_t n, const BigNat& lo, const BigNat& hi);

  /// Advances to the next cycle; false once the range is exhausted. Must be
  /// called before the first access.
  bool next();

  /// Vertex sequence of the current cycle, length n+1.
  std::span<const Vertex> current() const noexcept { return buffer_; }
  Cycle current_cycle() const { return Cycle::from_vertices(buffer_); }

  /// Offset of the current cycle from lo (0 for lo itself).
  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::size_t n_;
  std::vector<Vertex> buffer_;
  std::uint64_t remaining_ = 0;  // saturates; larger ranges cannot be walked anyway
  std::uint64_t offset_ = 0;
  bool started_ = false;
};

/// All (n-1)! cycles in ascending rank order.
std::vector<Cycle> enumerate_all(std::size_t n);

/// Number of directed edges present in both cycles. Throws SizeMismatch.
std::size_t shared_edges(const Cycle& a, const Cycle& b);
std::size_t shared_edges(std::span<const Vertex> succ_a, std::span<const Vertex> succ_b);

inline constexpr std::size_t kDefaultBruteForceCap = 11;

/// histogram[k] = number of cycles sharing exactly k directed edges with
/// ref, k = 0..n. Throws CapExceeded when n > cap.
std::vector<std::uint64_t> coincidence_histogram(std::size_t n, const Cycle& ref,
                                                 std::size_t cap = kDefaultBruteForceCap);

}  // namespace gap
