#include "gap/cost_matrix.hpp"

#include <cmath>
#include <string>

#include "gap/error.hpp"

namespace gap {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::ArbitraryGap: return "GAP";
    case MatrixKind::SymmetricTsp: return "TSP";
    case MatrixKind::Euclidean2d: return "POINTS";
  }
  return "?";
}

PointSet PointSet::create(std::vector<Point2> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "a point set needs at least 2 points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(i + 1) + " has a non-finite coordinate");
    }
  }
  return PointSet(std::move(points));
}

namespace {

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

CostMatrix CostMatrix::create(std::size_t n, std::vector<double> entries, MatrixKind kind) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "n must be at least 2");
  if (entries.size() != n * n) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries.size()));
  }
  if (kind == MatrixKind::Euclidean2d) {
    throw Error(ErrorCode::InvalidArgument, "Euclidean matrices are built from points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double c = entries[i * n + j];
      if (std::isnan(c)) throw Error(ErrorCode::InvalidArgument, "NaN entry at " + cell(i, j));
      if (c == -kInfinity) throw Error(ErrorCode::NegativeInfinity, "-inf entry at " + cell(i, j));
      if (i == j && c != kInfinity) throw Error(ErrorCode::DiagonalNotInfinite, "entry " + cell(i, i));
    }
  }
  if (kind == MatrixKind::SymmetricTsp) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double a = entries[i * n + j];
        const double b = entries[j * n + i];
        if (a != b) throw Error(ErrorCode::SymmetryViolation, cell(i, j) + " != " + cell(j, i));
        if (a < 0.0) throw Error(ErrorCode::NegativeCost, "entry " + cell(i, j));
      }
    }
  }
  return CostMatrix(n, std::move(entries), kind);
}

CostMatrix CostMatrix::create(const std::vector<std::vector<double>>& rows, MatrixKind kind) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix rows must have n entries");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return create(n, std::move(flat), kind);
}

CostMatrix CostMatrix::from_points(const PointSet& points) {
  const std::size_t n = points.size();
  std::vector<double> entries(n * n, kInfinity);
  bool duplicate = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      entries[i * n + j] = d;
      if (d == 0.0) duplicate = true;
    }
  }
  CostMatrix m(n, std::move(entries), MatrixKind::Euclidean2d);
  m.points_ = points;
  m.duplicate_points_ = duplicate;
  return m;
}

}  // namespace gap
