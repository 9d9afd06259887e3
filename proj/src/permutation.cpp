#include "gap/permutation.hpp"

#include <numeric>
#include <string>

#include "gap/error.hpp"

namespace gap {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> f(n);
  std::iota(f.begin(), f.end(), 1);
  return Permutation(f, f);
}

Permutation Permutation::from_forward(std::vector<Vertex> forward) {
  const std::size_t n = forward.size();
  std::vector<Vertex> inverse(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = forward[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || inverse[static_cast<std::size_t>(v - 1)] != 0) {
      throw Error(ErrorCode::InvalidPermutation, "not a bijection on 1.." + std::to_string(n));
    }
    inverse[static_cast<std::size_t>(v - 1)] = static_cast<Vertex>(i + 1);
  }
  return Permutation(std::move(forward), std::move(inverse));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error(ErrorCode::SizeMismatch, "composing permutations of different size");
  std::vector<Vertex> f(size());
  for (std::size_t i = 0; i < size(); ++i) f[i] = next(forward_[i]);
  return from_forward(std::move(f));
}

Cycle Permutation::apply(const Cycle& cycle) const {
  cycle.require_size(size());
  std::vector<Vertex> out;
  out.reserve(cycle.vertices().size());
  for (Vertex v : cycle.vertices()) out.push_back((*this)(v));
  return Cycle::from_vertices(std::move(out));
}

Cycle Permutation::apply_inverse(const Cycle& cycle) const {
  cycle.require_size(size());
  std::vector<Vertex> out;
  out.reserve(cycle.vertices().size());
  for (Vertex v : cycle.vertices()) out.push_back(inverse(v));
  return Cycle::from_vertices(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] != static_cast<Vertex>(i + 1)) return false;
  }
  return true;
}

}  // namespace gap
