#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gap/extended_real.hpp"

namespace gap {

/// Vertex labels are 1-based everywhere in the public API.
using Vertex = int;

enum class MatrixKind { ArbitraryGap, SymmetricTsp, Euclidean2d };

std::string_view to_string(MatrixKind kind);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// At least two points, all coordinates finite.
class PointSet {
 public:
  static PointSet create(std::vector<Point2> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const Point2> points() const noexcept { return points_; }
  const Point2& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  explicit PointSet(std::vector<Point2> points) : points_(std::move(points)) {}
  std::vector<Point2> points_;
};

/// Edge costs of a complete directed graph on n vertices. Entry (i, i) is
/// always +infinity. Immutable after construction.
class CostMatrix {
 public:
  /// `entries` is row-major n*n. Throws DimensionMismatch,
  /// DiagonalNotInfinite, SymmetryViolation, NegativeCost, NegativeInfinity.
  static CostMatrix create(std::size_t n, std::vector<double> entries, MatrixKind kind);
  static CostMatrix create(const std::vector<std::vector<double>>& rows, MatrixKind kind);

  /// Euclidean distances between the points; duplicate points are kept
  /// (zero-cost edge) and reported through has_duplicate_points().
  static CostMatrix from_points(const PointSet& points);

  std::size_t n() const noexcept { return n_; }
  MatrixKind kind() const noexcept { return kind_; }

  /// Cost of edge (i, j), 1-based.
  double operator()(Vertex i, Vertex j) const noexcept {
    return entries_[static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1)];
  }

  /// Row of vertex i (1-based), length n, diagonal included.
  std::span<const double> row(Vertex i) const noexcept {
    return std::span<const double>(entries_).subspan(static_cast<std::size_t>(i - 1) * n_, n_);
  }
  std::span<const double> entries() const noexcept { return entries_; }

  const std::optional<PointSet>& points() const noexcept { return points_; }
  bool has_duplicate_points() const noexcept { return duplicate_points_; }

  friend bool operator==(const CostMatrix& a, const CostMatrix& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.entries_ == b.entries_;
  }

 private:
  CostMatrix(std::size_t n, std::vector<double> entries, MatrixKind kind)
      : n_(n), entries_(std::move(entries)), kind_(kind) {}

  std::size_t n_;
  std::vector<double> entries_;
  MatrixKind kind_;
  std::optional<PointSet> points_;
  bool duplicate_points_ = false;
};

/// Dense n*n matrix of plain reals (normalization output).
struct RealMatrix {
  std::size_t n = 0;
  std::vector<double> values;

  double at(Vertex i, Vertex j) const {
    return values[static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)];
  }
};

}  // namespace gap
