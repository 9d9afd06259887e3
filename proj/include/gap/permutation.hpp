#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"

namespace gap {

/// Bijection on {1..n}. Stores both directions.
class Permutation {
 public:
  static Permutation identity(std::size_t n);
  /// forward[v-1] is the image of v. Throws InvalidPermutation.
  static Permutation from_forward(std::vector<Vertex> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  Vertex operator()(Vertex v) const noexcept { return forward_[static_cast<std::size_t>(v - 1)]; }
  Vertex inverse(Vertex v) const noexcept { return inverse_[static_cast<std::size_t>(v - 1)]; }

  std::span<const Vertex> forward_map() const noexcept { return forward_; }
  std::span<const Vertex> inverse_map() const noexcept { return inverse_; }

  Permutation inverted() const { return Permutation(inverse_, forward_); }

  /// v -> next(this(v)).
  Permutation then(const Permutation& next) const;

  /// Image of every vertex of the cycle, order kept.
  Cycle apply(const Cycle& cycle) const;
  Cycle apply_inverse(const Cycle& cycle) const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.forward_ == b.forward_; }

 private:
  Permutation(std::vector<Vertex> forward, std::vector<Vertex> inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
};

}  // namespace gap
