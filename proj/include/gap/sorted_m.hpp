#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"
#include "gap/enumeration.hpp"

namespace gap {

struct SortedEntry {
  double cost = 0.0;
  Vertex vertex = 0;
  friend bool operator==(const SortedEntry&, const SortedEntry&) = default;
};

/// Per-vertex outgoing edges sorted ascending by (cost, vertex). Row v has
/// n-1 entries: every vertex except v exactly once.
class SortedM {
 public:
  explicit SortedM(const CostMatrix& m);

  std::size_t n() const noexcept { return n_; }
  std::size_t width() const noexcept { return n_ - 1; }

  std::span<const SortedEntry> row(Vertex v) const noexcept {
    return std::span<const SortedEntry>(entries_).subspan(static_cast<std::size_t>(v - 1) * width(), width());
  }
  const SortedEntry& at(Vertex v, std::size_t column) const noexcept { return row(v)[column]; }

  /// Column of the edge (v, target) inside row v.
  std::size_t column_of(Vertex v, Vertex target) const noexcept {
    return columns_[static_cast<std::size_t>(v - 1) * n_ + static_cast<std::size_t>(target - 1)];
  }
  double cost(Vertex v, Vertex target) const noexcept { return at(v, column_of(v, target)).cost; }

 private:
  std::size_t n_;
  std::vector<SortedEntry> entries_;
  std::vector<std::size_t> columns_;
};

inline SortedM build_sorted_m(const CostMatrix& m) { return SortedM(m); }

enum class FirstColumnStatus { SingleCycle, CoversButSubtours, NotAPermutation };

struct FirstColumnResult {
  std::optional<Cycle> cycle;  ///< set only for SingleCycle; starts at vertex 1
  FirstColumnStatus status;
};

/// Follows every row's cheapest edge. When those edges form one Hamiltonian
/// cycle it is optimal: its cost equals row_minima_lower_bound. A covering
/// map that splits into subtours proves nothing and is reported as such.
FirstColumnResult first_column_check(const SortedM& s);

/// Sum of row minima, a lower bound on every cycle cost.
double row_minima_lower_bound(const CostMatrix& m);

/// Nearest neighbour from `start` using the sorted rows.
Cycle greedy_initial_cycle(const SortedM& s, Vertex start);

/// Where a reference cycle's outgoing edges sit inside SortedM.
struct Frontier {
  Cycle reference;
  std::vector<std::size_t> positions;  ///< positions[v-1]: column of (v, succ(v))
  std::vector<double> costs;           ///< costs[v-1]: cost of (v, succ(v))
};

Frontier frontier_of(const SortedM& s, const Cycle& y);

enum class FrontierSide { Below, Above, Oscillating, On };

std::string_view to_string(FrontierSide side);

/// Per-vertex comparison of y's outgoing edge cost with the frontier's.
FrontierSide classify(const Frontier& f, const Cycle& y, const SortedM& s);

/// Same comparison against a frontier cost vector, reading y's edge costs
/// from the matrix. `y` is a vertex sequence of length n+1.
FrontierSide classify_against(std::span<const double> frontier_costs, std::span<const Vertex> y, const CostMatrix& m);

struct BelowCheck {
  bool holds = true;
  std::optional<Cycle> witness;  ///< lowest-rank cycle strictly below, if any
};

/// Necessary optimality condition: no cycle lies Below y's frontier.
/// Scans every cycle; throws CapExceeded when n > cap.
BelowCheck assert_no_strictly_below(const CostMatrix& m, const Cycle& y, std::size_t cap = kDefaultBruteForceCap);

/// Same check restricted to caller-supplied candidates (any n).
BelowCheck assert_no_strictly_below(const CostMatrix& m, const Cycle& y, std::span<const Cycle> candidates);

}  // namespace gap
