#include "gap/sorted_m.hpp"

#include <algorithm>
#include <string>

#include "gap/error.hpp"

namespace gap {

SortedM::SortedM(const CostMatrix& m) : n_(m.n()), entries_(m.n() * (m.n() - 1)), columns_(m.n() * m.n(), 0) {
  for (Vertex v = 1; v <= static_cast<Vertex>(n_); ++v) {
    const auto base = entries_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v - 1) * width());
    auto out = base;
    for (Vertex j = 1; j <= static_cast<Vertex>(n_); ++j) {
      if (j != v) *out++ = SortedEntry{m(v, j), j};
    }
    std::sort(base, out, [](const SortedEntry& a, const SortedEntry& b) {
      return a.cost < b.cost || (a.cost == b.cost && a.vertex < b.vertex);
    });
    for (std::size_t c = 0; c < width(); ++c) {
      columns_[static_cast<std::size_t>(v - 1) * n_ + static_cast<std::size_t>(base[static_cast<std::ptrdiff_t>(c)].vertex - 1)] = c;
    }
  }
}

FirstColumnResult first_column_check(const SortedM& s) {
  const std::size_t n = s.n();
  std::vector<Vertex> succ(n);
  std::vector<bool> hit(n, false);
  bool permutation = true;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    const Vertex t = s.at(v, 0).vertex;
    succ[static_cast<std::size_t>(v - 1)] = t;
    if (hit[static_cast<std::size_t>(t - 1)]) permutation = false;
    hit[static_cast<std::size_t>(t - 1)] = true;
  }
  if (!permutation) return {std::nullopt, FirstColumnStatus::NotAPermutation};

  std::size_t length = 0;
  Vertex v = 1;
  do {
    v = succ[static_cast<std::size_t>(v - 1)];
    ++length;
  } while (v != 1);
  if (length != n) return {std::nullopt, FirstColumnStatus::CoversButSubtours};
  return {Cycle::from_successors(succ, 1), FirstColumnStatus::SingleCycle};
}

double row_minima_lower_bound(const CostMatrix& m) {
  ExactAccumulator acc;
  for (Vertex v = 1; v <= static_cast<Vertex>(m.n()); ++v) {
    double best = kInfinity;
    for (Vertex j = 1; j <= static_cast<Vertex>(m.n()); ++j) {
      if (j != v) best = std::min(best, m(v, j));
    }
    acc.add(best);
  }
  return acc.value();
}

Cycle greedy_initial_cycle(const SortedM& s, Vertex start) {
  const std::size_t n = s.n();
  if (start < 1 || static_cast<std::size_t>(start) > n) throw Error(ErrorCode::InvalidArgument, "start vertex out of range");
  std::vector<bool> visited(n, false);
  std::vector<Vertex> path;
  path.reserve(n + 1);
  Vertex current = start;
  visited[static_cast<std::size_t>(start - 1)] = true;
  path.push_back(start);
  while (path.size() < n) {
    for (const SortedEntry& e : s.row(current)) {
      if (!visited[static_cast<std::size_t>(e.vertex - 1)]) {
        current = e.vertex;
        break;
      }
    }
    visited[static_cast<std::size_t>(current - 1)] = true;
    path.push_back(current);
  }
  path.push_back(start);
  return Cycle::from_vertices(std::move(path));
}

Frontier frontier_of(const SortedM& s, const Cycle& y) {
  y.require_size(s.n());
  Frontier f{y, std::vector<std::size_t>(s.n()), std::vector<double>(s.n())};
  for (std::size_t k = 0; k < y.n(); ++k) {
    const Vertex v = y[k];
    const std::size_t col = s.column_of(v, y[k + 1]);
    f.positions[static_cast<std::size_t>(v - 1)] = col;
    f.costs[static_cast<std::size_t>(v - 1)] = s.at(v, col).cost;
  }
  return f;
}

std::string_view to_string(FrontierSide side) {
  switch (side) {
    case FrontierSide::Below: return "Below";
    case FrontierSide::Above: return "Above";
    case FrontierSide::Oscillating: return "Oscillating";
    case FrontierSide::On: return "On";
  }
  return "?";
}

namespace {

FrontierSide side_of(bool any_less, bool any_greater) {
  if (any_less && any_greater) return FrontierSide::Oscillating;
  if (any_less) return FrontierSide::Below;
  if (any_greater) return FrontierSide::Above;
  return FrontierSide::On;
}

}  // namespace

FrontierSide classify(const Frontier& f, const Cycle& y, const SortedM& s) {
  y.require_size(s.n());
  if (f.costs.size() != s.n()) throw Error(ErrorCode::SizeMismatch, "frontier built on a different SortedM");
  bool less = false;
  bool greater = false;
  for (std::size_t k = 0; k < y.n(); ++k) {
    const double c = s.cost(y[k], y[k + 1]);
    const double ref = f.costs[static_cast<std::size_t>(y[k] - 1)];
    less = less || c < ref;
    greater = greater || c > ref;
  }
  return side_of(less, greater);
}

FrontierSide classify_against(std::span<const double> frontier_costs, std::span<const Vertex> y, const CostMatrix& m) {
  bool less = false;
  bool greater = false;
  for (std::size_t k = 0; k + 1 < y.size(); ++k) {
    const double c = m(y[k], y[k + 1]);
    const double ref = frontier_costs[static_cast<std::size_t>(y[k] - 1)];
    less = less || c < ref;
    greater = greater || c > ref;
  }
  return side_of(less, greater);
}

namespace {

std::vector<double> frontier_costs(const CostMatrix& m, const Cycle& y) {
  y.require_size(m.n());
  std::vector<double> costs(m.n());
  for (std::size_t k = 0; k < y.n(); ++k) costs[static_cast<std::size_t>(y[k] - 1)] = m(y[k], y[k + 1]);
  return costs;
}

}  // namespace

BelowCheck assert_no_strictly_below(const CostMatrix& m, const Cycle& y, std::size_t cap) {
  const std::size_t n = m.n();
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap) + "; supply candidates");
  }
  const std::vector<double> ref = frontier_costs(m, y);
  CycleEnumerator e(n);
  while (e.next()) {
    if (classify_against(ref, e.current(), m) == FrontierSide::Below) return {false, e.current_cycle()};
  }
  return {};
}

BelowCheck assert_no_strictly_below(const CostMatrix& m, const Cycle& y, std::span<const Cycle> candidates) {
  const std::vector<double> ref = frontier_costs(m, y);
  for (const Cycle& z : candidates) {
    z.require_size(m.n());
    if (classify_against(ref, z.vertices(), m) == FrontierSide::Below) return {false, z};
  }
  return {};
}

}  // namespace gap
