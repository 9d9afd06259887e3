#pragma once

#include <cstdint>
#include <span>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"
#include "gap/permutation.hpp"

namespace gap {

// Generators ---------------------------------------------------------------

/// Off-diagonal entries uniform in [lo, hi] from a seeded std::mt19937_64
/// stream; identical seeds give identical matrices on every platform.
CostMatrix gen_random_gap(std::size_t n, std::uint64_t seed, double lo, double hi);

/// n points uniform in [0, 1)^2, seeded the same way.
PointSet gen_random_points(std::size_t n, std::uint64_t seed);

/// Row i holds n^(i-1) * k, k walking 1..n-1 over the off-diagonal columns
/// left to right. Every complete cycle then has a distinct cost (its cost is
/// a base-n numeral whose digits are the chosen successors).
/// Throws Overflow for n > kMaxUniqueCostN.
inline constexpr std::size_t kMaxUniqueCostN = 12;
CostMatrix gen_unique_cost(std::size_t n);

// Edges and costs -----------------------------------------------------------

/// Integer id of the directed edge (i, j): positive above the diagonal,
/// negated id of (j, i) below it. Throws SelfLoop.
std::int64_t edge_id(Vertex i, Vertex j, std::size_t n);

/// Sum of the cycle's edge costs, correctly rounded (order independent).
/// Throws InvalidCycle.
double cycle_cost(const CostMatrix& m, const Cycle& y);

/// Sum of consecutive edge costs of an open path of distinct vertices.
double path_cost(const CostMatrix& m, std::span<const Vertex> path);

// Normalization ---------------------------------------------------------------

/// +inf -> 1, c >= 0 -> c / s+, c < 0 -> c / s-, with s+ the largest finite
/// entry (1 when none is positive) and s- the smallest entry. Note that c / s-
/// is positive for negative c. Throws AllInfinite.
RealMatrix normalize_scale(const CostMatrix& m);

/// +inf -> 1, finite c -> (c - min) / (max - min). Throws DegenerateRange.
RealMatrix normalize_scale_translate(const CostMatrix& m);

// Relabeling ----------------------------------------------------------------

/// Matrix c' with c'(p(i), p(j)) = c(i, j). Entries are copied, so every
/// cycle z keeps its cost: cost'(p(z)) == cost(z).
CostMatrix relabel(const CostMatrix& m, const Permutation& p);

struct Relabeling {
  CostMatrix matrix;
  Permutation perm;  ///< old label -> new label
};

/// The unique relabeling sending y = (i_1, ..., i_n, i_1) to
/// (n, n-1, ..., 1, n). Throws InvalidCycle.
Relabeling relabel_to_first(const CostMatrix& m, const Cycle& y);

}  // namespace gap
