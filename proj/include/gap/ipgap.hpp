#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"

namespace gap {

/// Assignment model over n*n binary variables x_ij:
///
///   min  sum_ij c_ij x_ij
///   s.t. sum_j x_ij = 1   (rows r_i)
///        sum_i x_ij = 1   (columns s_j)
///        x_ii = 0
///
/// No subtour elimination: feasible points are all derangements, of which
/// only (n-1)! are Hamiltonian cycles.
struct IpModel {
  std::size_t n = 0;
  std::vector<double> objective;   ///< row-major; 0 where fixed
  std::vector<std::uint8_t> fixed_zero;  ///< diagonal, plus any +inf edge

  std::size_t variable_count() const noexcept { return n * n; }
  bool is_fixed(Vertex i, Vertex j) const noexcept {
    return fixed_zero[static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)] != 0;
  }
  double coefficient(Vertex i, Vertex j) const noexcept {
    return objective[static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)];
  }
};

IpModel build_model(const CostMatrix& m);

/// Binary n*n matrix with one 1 per row and column and a zero diagonal.
class AssignmentPoint {
 public:
  /// Throws InvalidArgument when the constraints are violated.
  static AssignmentPoint create(std::size_t n, std::vector<std::uint8_t> x);

  std::size_t n() const noexcept { return n_; }
  bool operator()(Vertex i, Vertex j) const noexcept {
    return x_[static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1)] != 0;
  }
  std::span<const std::uint8_t> values() const noexcept { return x_; }

  friend bool operator==(const AssignmentPoint&, const AssignmentPoint&) = default;

 private:
  AssignmentPoint(std::size_t n, std::vector<std::uint8_t> x) : n_(n), x_(std::move(x)) {}
  std::size_t n_;
  std::vector<std::uint8_t> x_;
};

/// Whether a raw 0/1 matrix satisfies every constraint of the model.
bool is_feasible(std::size_t n, std::span<const std::uint8_t> x);

AssignmentPoint cycle_to_point(const Cycle& y);

/// Lengths of the subtours a feasible point decomposes into, listed by
/// their smallest vertex.
struct Subtours {
  std::vector<std::size_t> lengths;
};

/// The Hamiltonian cycle through vertex 1, or the subtour decomposition
/// when the assignment is not a single cycle.
std::variant<Cycle, Subtours> point_to_cycle(const AssignmentPoint& p);

/// As point_to_cycle, but throws SubtourError listing the lengths.
Cycle require_cycle(const AssignmentPoint& p);

/// Objective value at a point, correctly rounded.
double objective_value(const IpModel& model, const AssignmentPoint& p);

/// CPLEX-LP text: objective in row-major order with 17 significant digits,
/// r_i / s_j constraints, diagonal bounds, a Binary section, End.
std::string export_lp(const IpModel& model);

/// All n*n 0/1 matrices satisfying the model (derangements). n <= 8.
std::vector<AssignmentPoint> enumerate_feasible_points(std::size_t n);

}  // namespace gap
