#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"
#include "gap/enumeration.hpp"

namespace gap {

/// n*n boolean marks over directed edges; the diagonal is never marked.
class EdgeMarks {
 public:
  explicit EdgeMarks(std::size_t n) : n_(n), marks_(n * n, 0) {}

  std::size_t n() const noexcept { return n_; }
  bool operator()(Vertex v, Vertex j) const noexcept { return marks_[index(v, j)] != 0; }
  void set(Vertex v, Vertex j, bool on = true) noexcept { marks_[index(v, j)] = on ? 1 : 0; }
  std::size_t row_count(Vertex v) const noexcept;

  friend bool operator==(const EdgeMarks&, const EdgeMarks&) = default;

 private:
  std::size_t index(Vertex v, Vertex j) const noexcept {
    return static_cast<std::size_t>(v - 1) * n_ + static_cast<std::size_t>(j - 1);
  }
  std::size_t n_;
  std::vector<std::uint8_t> marks_;
};

/// max{c(1 - eps), c(1 + eps)}; +infinity when eps is +infinity.
double admission_threshold(double reference_cost, double eps);

/// c + |c| * eps: c(1 + eps) for non-negative c, and growing with eps for
/// either sign. This is the threshold the eps search steps through; it
/// agrees with admission_threshold whenever eps >= 0.
double estimation_threshold(double reference_cost, double eps);

/// Marks (v, j) when c(v, j) <= admission_threshold(c(v, succ(v)), eps[v-1]).
/// The reference edge is always marked. Throws InvalidCycle, SizeMismatch.
EdgeMarks admissible_edges(const CostMatrix& m, const Cycle& y, std::span<const double> eps);

struct SpaceSize {
  BigNat A;                      ///< product of a_i
  double p = 0.0;                ///< sum log2(a_i) / log2(n)
  std::vector<std::uint64_t> a;  ///< a_i = max(1, marks in row i)
};

SpaceSize research_space_size(const EdgeMarks& marks);

/// Admissible successor sets around a reference cycle, plus the eps value
/// each set was taken at.
class Alternatives {
 public:
  /// Sets are sorted and deduplicated. Throws InvalidArgument if a set is
  /// empty, contains its own vertex, or omits the reference successor.
  static Alternatives create(Cycle reference, std::vector<std::vector<Vertex>> successors, std::vector<double> eps,
                             std::vector<std::uint8_t> converged = {});

  /// Every edge admissible (no reduction).
  static Alternatives full(const Cycle& reference);
  /// Only the reference successor of each vertex.
  static Alternatives reference_only(const Cycle& reference);

  std::size_t n() const noexcept { return sets_.size(); }
  const Cycle& reference() const noexcept { return reference_; }
  std::span<const Vertex> successors(Vertex v) const noexcept { return sets_[static_cast<std::size_t>(v - 1)]; }
  std::span<const double> eps() const noexcept { return eps_; }
  /// False where the eps search hit its iteration cap.
  bool converged(Vertex v) const noexcept { return converged_[static_cast<std::size_t>(v - 1)] != 0; }
  bool all_converged() const noexcept;

  std::vector<std::uint64_t> counts() const;
  EdgeMarks marks() const;

 private:
  Alternatives(Cycle reference, std::vector<std::vector<Vertex>> sets, std::vector<double> eps,
               std::vector<std::uint8_t> converged)
      : reference_(std::move(reference)), sets_(std::move(sets)), eps_(std::move(eps)), converged_(std::move(converged)) {}

  Cycle reference_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<double> eps_;
  std::vector<std::uint8_t> converged_;
};

struct EstimateOptions {
  double step = 0.01;
  std::size_t max_iter = 10000;
  /// Where each vertex's search begins.
  double eps_start = -1.0;
  /// After the search, eps values below this are raised to it and the set is
  /// recomputed (widening only). +infinity admits every edge.
  std::optional<double> eps_floor;
};

/// Per vertex v with reference successor k: starting at eps_start, step eps
/// up until more than one vertex j satisfies c(v, j) <= estimation_threshold(
/// c(v, k), eps), always counting k. A vertex whose search exhausts max_iter
/// keeps {k} alone and is flagged unconverged.
Alternatives estimate_alternatives(const CostMatrix& m, const Cycle& y, const EstimateOptions& options = {});

/// sum log2(a_i) / log2(n - T). `a` has one entry per vertex (tube vertices
/// are passed as 1). Throws DegenerateDenominator when n - T < 2.
double reducibility_degree(std::span<const std::uint64_t> a, std::size_t tube_vertices, std::size_t n);

/// max over clouds of sum log2(a_i) within the cloud, over log2(n - T).
double parallel_degree(std::span<const std::vector<std::uint64_t>> clouds, std::size_t tube_vertices, std::size_t n);

struct Tubes {
  std::size_t T = 0;
  std::vector<std::vector<Vertex>> segments;  ///< in reference-cycle order
};

/// Maximal runs of consecutive reference-cycle vertices with fewer than 3
/// alternatives (runs wrap around the cycle).
Tubes detect_tubes(const Alternatives& alts);

struct ReductionReport {
  BigNat A;
  double p = 0.0;  ///< sum log2(a_i) / log2(n)
  std::vector<std::uint64_t> a;
  std::vector<double> eps;
  std::size_t T = 0;
  std::vector<std::vector<Vertex>> tubes;
  /// reducibility_degree with tube vertices counted as 1; absent when n - T < 2.
  std::optional<double> p_tubes;
};

ReductionReport reduction_report(const Alternatives& alts);

/// {"A": "<decimal>", "p": .., "a": [..], "eps": [..], "T": .., "tubes": [[..]], "p_tubes": ..|null}
std::string report_to_json(const ReductionReport& report);

}  // namespace gap
