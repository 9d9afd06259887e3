#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/error.hpp"
#include "gap/extended_real.hpp"
#include "gap/instance.hpp"

namespace fx {

inline constexpr double I = gap::kInfinity;

inline gap::CostMatrix gap_matrix(const std::vector<std::vector<double>>& rows) {
  return gap::CostMatrix::create(rows, gap::MatrixKind::ArbitraryGap);
}

inline gap::CostMatrix tsp_matrix(const std::vector<std::vector<double>>& rows) {
  return gap::CostMatrix::create(rows, gap::MatrixKind::SymmetricTsp);
}

inline gap::CostMatrix points(const std::vector<gap::Point2>& pts) {
  return gap::CostMatrix::from_points(gap::PointSet::create(pts));
}

inline gap::CostMatrix euclid(std::size_t n, std::uint64_t seed) {
  return gap::CostMatrix::from_points(gap::gen_random_points(n, seed));
}

// GAP instance whose row minima form one Hamiltonian cycle: a random cycle
// gets costs in [0, 0.5), every other edge costs in [1, 2).
inline gap::CostMatrix first_column_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<gap::Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<gap::Vertex>(i + 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> cheap(0.0, 0.5), dear(1.0, 2.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, I));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) rows[i][j] = dear(rng);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    rows[static_cast<std::size_t>(order[k] - 1)][static_cast<std::size_t>(order[(k + 1) % n] - 1)] = cheap(rng);
  }
  return gap_matrix(rows);
}

// Error code thrown by fn, or nullopt when it returns normally.
inline std::optional<gap::ErrorCode> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const gap::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fx
