#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gap/cost_matrix.hpp"

namespace gap {

/// A complete (Hamiltonian) cycle: n+1 vertices, first == last, the first
/// n a permutation of 1..n.
class Cycle {
 public:
  /// Throws InvalidCycle.
  static Cycle from_vertices(std::vector<Vertex> vertices);

  /// Builds the cycle that starts at `start` and follows succ[v-1].
  /// Throws InvalidCycle if succ is not a single n-cycle.
  static Cycle from_successors(std::span<const Vertex> succ, Vertex start);

  /// Parses "5,4,3,2,1,5" (whitespace tolerated). Throws ParseError or
  /// InvalidCycle.
  static Cycle parse(std::string_view text);

  std::size_t n() const noexcept { return vertices_.size() - 1; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t k) const noexcept { return vertices_[k]; }
  Vertex front() const noexcept { return vertices_.front(); }

  /// succ[v-1] is the vertex following v.
  std::vector<Vertex> successors() const;

  /// Same cycle, same direction, starting (and ending) at `start`.
  Cycle rotated_to(Vertex start) const;

  /// Comma-separated 1-based labels.
  std::string to_string() const;

  /// Throws InvalidCycle if this cycle does not live on an n-vertex graph.
  void require_size(std::size_t n) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  explicit Cycle(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  std::vector<Vertex> vertices_;
};

}  // namespace gap
