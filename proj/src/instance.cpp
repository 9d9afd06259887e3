#include "gap/instance.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "gap/error.hpp"

namespace gap {

namespace {

// Bits-to-[0,1) mapping is done by hand because std distributions are not
// bit-reproducible across standard library implementations.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CostMatrix gen_random_gap(std::size_t n, std::uint64_t seed, double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::InvalidArgument, "need finite lo < hi");
  }
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "n must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<double> entries(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) entries[i * n + j] = std::clamp(lo + (hi - lo) * unit_draw(rng), lo, hi);
    }
  }
  return CostMatrix::create(n, std::move(entries), MatrixKind::ArbitraryGap);
}

PointSet gen_random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = unit_draw(rng);
    p.y = unit_draw(rng);
  }
  return PointSet::create(std::move(pts));
}

CostMatrix gen_unique_cost(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "n must be at least 2");
  if (n > kMaxUniqueCostN) {
    throw Error(ErrorCode::Overflow, "unique-cost entries are exact only for n <= " + std::to_string(kMaxUniqueCostN));
  }
  std::vector<double> entries(n * n, kInfinity);
  std::uint64_t scale = 1;  // n^(i-1)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::uint64_t k = j < i ? j + 1 : j;
      entries[i * n + j] = static_cast<double>(scale * k);
    }
    scale *= n;
  }
  return CostMatrix::create(n, std::move(entries), MatrixKind::ArbitraryGap);
}

std::int64_t edge_id(Vertex i, Vertex j, std::size_t n) {
  const auto nn = static_cast<Vertex>(n);
  if (i < 1 || j < 1 || i > nn || j > nn) throw Error(ErrorCode::InvalidArgument, "vertex outside 1..n");
  if (i == j) throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(i) + "," + std::to_string(i) + ")");
  const std::int64_t a = i;
  const std::int64_t b = j;
  if (a < b) return (b - 2) * (b - 1) / 2 + a;
  return -((a - 2) * (a - 1) / 2 + b);
}

double cycle_cost(const CostMatrix& m, const Cycle& y) {
  y.require_size(m.n());
  ExactAccumulator acc;
  for (std::size_t k = 0; k < y.n(); ++k) acc.add(m(y[k], y[k + 1]));
  return acc.value();
}

double path_cost(const CostMatrix& m, std::span<const Vertex> path) {
  ExactAccumulator acc;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) acc.add(m(path[k], path[k + 1]));
  return acc.value();
}

RealMatrix normalize_scale(const CostMatrix& m) {
  bool any_finite = false;
  double max_finite = -kInfinity;
  double min_entry = kInfinity;
  for (double c : m.entries()) {
    if (is_pos_inf(c)) continue;
    any_finite = true;
    max_finite = std::max(max_finite, c);
    min_entry = std::min(min_entry, c);
  }
  if (!any_finite) throw Error(ErrorCode::AllInfinite, "no finite entry to scale by");
  const double s_plus = max_finite > 0.0 ? max_finite : 1.0;
  const double s_minus = min_entry;
  RealMatrix out{m.n(), std::vector<double>(m.entries().size())};
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const double c = m.entries()[k];
    if (is_pos_inf(c)) out.values[k] = 1.0;
    else if (c >= 0.0) out.values[k] = c / s_plus;
    else out.values[k] = c / s_minus;
  }
  return out;
}

RealMatrix normalize_scale_translate(const CostMatrix& m) {
  double lo = kInfinity;
  double hi = -kInfinity;
  for (double c : m.entries()) {
    if (is_pos_inf(c)) continue;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (!(hi > lo)) throw Error(ErrorCode::DegenerateRange, "fewer than two distinct finite entries");
  const double s = hi - lo;
  RealMatrix out{m.n(), std::vector<double>(m.entries().size())};
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const double c = m.entries()[k];
    out.values[k] = is_pos_inf(c) ? 1.0 : std::clamp((c - lo) / s, 0.0, 1.0);
  }
  return out;
}

CostMatrix relabel(const CostMatrix& m, const Permutation& p) {
  const std::size_t n = m.n();
  if (p.size() != n) throw Error(ErrorCode::SizeMismatch, "permutation size differs from matrix size");
  if (m.kind() == MatrixKind::Euclidean2d && m.points()) {
    std::vector<Point2> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[static_cast<std::size_t>(p(static_cast<Vertex>(i + 1)) - 1)] = (*m.points())[i];
    return CostMatrix::from_points(PointSet::create(std::move(moved)));
  }
  std::vector<double> entries(n * n);
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(n); ++j) {
      entries[static_cast<std::size_t>(p(i) - 1) * n + static_cast<std::size_t>(p(j) - 1)] = m(i, j);
    }
  }
  return CostMatrix::create(n, std::move(entries), m.kind());
}

Relabeling relabel_to_first(const CostMatrix& m, const Cycle& y) {
  y.require_size(m.n());
  const std::size_t n = m.n();
  std::vector<Vertex> forward(n);
  for (std::size_t k = 0; k < n; ++k) forward[static_cast<std::size_t>(y[k] - 1)] = static_cast<Vertex>(n - k);
  Permutation perm = Permutation::from_forward(std::move(forward));
  return Relabeling{relabel(m, perm), std::move(perm)};
}

}  // namespace gap
