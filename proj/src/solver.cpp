#include "gap/solver.hpp"
#include "gap/sorted_m.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "gap/error.hpp"
#include "gap/instance.hpp"
#include "gap/permutation.hpp"

namespace gap {

void SolveConfig::validate() const {
  if (std::isnan(eps_lo) || std::isnan(eps_hi) || eps_lo > eps_hi) {
    throw Error(ErrorCode::InvalidArgument, "need eps_lo <= eps_hi");
  }
  if (eps_lo < -1.0 || !std::isfinite(eps_lo)) throw Error(ErrorCode::InvalidArgument, "eps_lo must be finite and >= -1");
  if (!(eps_step > 0.0) || !std::isfinite(eps_step)) throw Error(ErrorCode::InvalidArgument, "eps_step must be > 0");
  if (max_generated_cycles < 1 || max_outer_iterations < 1 || max_eps_iterations < 1 || brute_force_cap < 1) {
    throw Error(ErrorCode::InvalidArgument, "caps must be >= 1");
  }
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::ExactByBruteForce: return "ExactByBruteForce";
    case Certificate::FixpointInReducedSpace: return "FixpointInReducedSpace";
    case Certificate::CapExhausted: return "CapExhausted";
  }
  return "?";
}

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::ConfirmedLocal: return "ConfirmedLocal";
    case VerifyStatus::Improved: return "Improved";
    case VerifyStatus::CapExhausted: return "CapExhausted";
  }
  return "?";
}

// Brute force ------------------------------------------------------------------

namespace {

struct Incumbent {
  double cost = kInfinity;
  std::uint64_t rank = 0;  // 0: none yet
  std::vector<Vertex> cycle;

  bool beats(const Incumbent& other) const {
    if (rank == 0) return false;
    if (other.rank == 0) return true;
    return cost < other.cost || (cost == other.cost && rank < other.rank);
  }
};

double sequence_cost(const CostMatrix& m, std::span<const Vertex> y) {
  ExactAccumulator acc;
  for (std::size_t k = 0; k + 1 < y.size(); ++k) acc.add(m(y[k], y[k + 1]));
  return acc.value();
}

Incumbent scan_range(const CostMatrix& m, std::uint64_t lo, std::uint64_t hi) {
  Incumbent best;
  CycleEnumerator e(m.n(), lo, hi);
  while (e.next()) {
    const double c = sequence_cost(m, e.current());
    if (best.rank == 0 || c < best.cost) {
      best.cost = c;
      best.rank = lo + e.offset();
      best.cycle.assign(e.current().begin(), e.current().end());
    }
  }
  return best;
}

// Depth-first walk in descending vertex order visits cycles in ascending
// rank, so the first cycle reaching a cost is also the lowest-rank one.
class PrunedSearch {
 public:
  explicit PrunedSearch(const CostMatrix& m) : m_(m), n_(m.n()), used_(m.n() + 1, false) {}

  Incumbent run() {
    path_.assign(1, static_cast<Vertex>(n_));
    used_[n_] = true;
    ExactAccumulator acc;
    descend(acc);
    return best_;
  }

  std::uint64_t evaluated() const { return evaluated_; }

 private:
  void descend(const ExactAccumulator& acc) {
    const Vertex last = path_.back();
    if (path_.size() == n_) {
      ExactAccumulator closed = acc;
      closed.add(m_(last, static_cast<Vertex>(n_)));
      const double c = closed.value();
      ++evaluated_;
      if (best_.rank == 0 || c < best_.cost) {
        path_.push_back(static_cast<Vertex>(n_));
        best_.cost = c;
        best_.cycle = path_;
        best_.rank = static_cast<std::uint64_t>(rank(Cycle::from_vertices(path_)).value());
        path_.pop_back();
      }
      return;
    }
    for (Vertex v = static_cast<Vertex>(n_) - 1; v >= 1; --v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      ExactAccumulator next = acc;
      next.add(m_(last, v));
      // Costs are non-negative: no completion of this prefix can do better.
      if (best_.rank != 0 && next.value() >= best_.cost) continue;
      used_[static_cast<std::size_t>(v)] = true;
      path_.push_back(v);
      descend(next);
      path_.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const CostMatrix& m_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<Vertex> path_;
  Incumbent best_;
  std::uint64_t evaluated_ = 0;
};

}  // namespace

SolveResult brute_force_solve(const CostMatrix& m, const BruteForceOptions& options) {
  const std::size_t n = m.n();
  if (n > options.cap) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(options.cap));
  }
  if (n > 21) throw Error(ErrorCode::CapExceeded, "brute force supports n <= 21");
  if (options.threads == 0) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");

  const auto total = static_cast<std::uint64_t>(cycle_count(n));
  Incumbent best;
  std::uint64_t examined = total;

  if (options.prune) {
    if (m.kind() == MatrixKind::ArbitraryGap) {
      throw Error(ErrorCode::InvalidArgument, "pruning needs non-negative costs (TSP or Euclidean matrices)");
    }
    PrunedSearch search(m);
    best = search.run();
    examined = search.evaluated();
  } else {
    const std::uint64_t parts = std::min<std::uint64_t>(options.threads, total);
    std::vector<Incumbent> partial(parts);
    std::vector<std::thread> workers;
    for (std::uint64_t p = 0; p < parts; ++p) {
      const std::uint64_t lo = 1 + total * p / parts;
      const std::uint64_t hi = total * (p + 1) / parts;
      if (parts == 1) {
        partial[p] = scan_range(m, lo, hi);
      } else {
        workers.emplace_back([&m, &partial, p, lo, hi] { partial[p] = scan_range(m, lo, hi); });
      }
    }
    for (auto& w : workers) w.join();
    for (const Incumbent& inc : partial) {
      if (inc.beats(best)) best = inc;
    }
  }

  SolveResult r{Cycle::from_vertices(best.cycle), 0.0, Certificate::ExactByBruteForce, {}, {}, {}, 0, {}};
  r.cost = best.cost;
  r.certificate = Certificate::ExactByBruteForce;
  r.report = reduction_report(Alternatives::full(r.best));
  r.cycles_examined = examined;
  r.best_rank = BigNat(best.rank);
  r.improvement_trace = {best.cost};
  return r;
}

// Reduced-space generation -------------------------------------------------------

namespace {

class ReducedWalker {
 public:
  ReducedWalker(const Alternatives& alts, const std::function<bool(std::span<const Vertex>)>& visit)
      : alts_(alts), visit_(visit), n_(alts.n()), used_(alts.n() + 1, false) {}

  std::uint64_t run() {
    path_.assign(1, static_cast<Vertex>(n_));
    used_[n_] = true;
    descend();
    return visited_;
  }

 private:
  void descend() {
    const Vertex last = path_.back();
    const auto choices = alts_.successors(last);
    if (path_.size() == n_) {
      if (std::binary_search(choices.begin(), choices.end(), static_cast<Vertex>(n_))) {
        path_.push_back(static_cast<Vertex>(n_));
        ++visited_;
        if (!visit_(path_)) stopped_ = true;
        path_.pop_back();
      }
      return;
    }
    for (Vertex v : choices) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      path_.push_back(v);
      descend();
      path_.pop_back();
      used_[static_cast<std::size_t>(v)] = false;
      if (stopped_) return;
    }
  }

  const Alternatives& alts_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<Vertex> path_;
  std::uint64_t visited_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::uint64_t for_each_reduced_cycle(const Alternatives& alts,
                                     const std::function<bool(std::span<const Vertex>)>& visit) {
  return ReducedWalker(alts, visit).run();
}

std::vector<Cycle> generate_reduced_cycles(const Alternatives& alts, std::uint64_t limit) {
  std::vector<Cycle> out;
  if (limit == 0) return out;
  for_each_reduced_cycle(alts, [&](std::span<const Vertex> y) {
    out.push_back(Cycle::from_vertices(std::vector<Vertex>(y.begin(), y.end())));
    return out.size() < limit;
  });
  return out;
}

// Frontier loop ------------------------------------------------------------------

namespace {

// Report of the relabeled space expressed in the caller's labels.
ReductionReport report_in_original_labels(const ReductionReport& relabeled, const Permutation& perm) {
  ReductionReport r = relabeled;
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto new_label = static_cast<std::size_t>(perm(static_cast<Vertex>(i + 1)) - 1);
    r.a[i] = relabeled.a[new_label];
    r.eps[i] = relabeled.eps[new_label];
  }
  for (auto& seg : r.tubes) {
    for (Vertex& v : seg) v = perm.inverse(v);
  }
  return r;
}

Cycle descending_cycle(std::size_t n) {
  std::vector<Vertex> y(n + 1);
  for (std::size_t k = 0; k < n; ++k) y[k] = static_cast<Vertex>(n - k);
  y[n] = static_cast<Vertex>(n);
  return Cycle::from_vertices(std::move(y));
}

}  // namespace

SolveResult frontier_solve(const CostMatrix& m, const SolveConfig& cfg, std::optional<Cycle> seed) {
  cfg.validate();
  const std::size_t n = m.n();
  const auto anchor = static_cast<Vertex>(n);

  Cycle incumbent = seed ? *seed : greedy_initial_cycle(SortedM(m), anchor);
  incumbent.require_size(n);
  incumbent = incumbent.rotated_to(anchor);
  double best_cost = cycle_cost(m, incumbent);

  SolveResult result{incumbent, 0.0, Certificate::CapExhausted, {}, {}, {}, 0, {}};
  result.improvement_trace.push_back(best_cost);
  std::uint64_t examined = 0;
  Certificate certificate = Certificate::CapExhausted;
  const Cycle first = descending_cycle(n);

  EstimateOptions est;
  est.step = cfg.eps_step;
  est.max_iter = cfg.max_eps_iterations;
  est.eps_start = cfg.eps_lo;
  est.eps_floor = cfg.eps_hi;

  for (std::size_t pass = 0; pass < cfg.max_outer_iterations; ++pass) {
    result.outer_iterations = pass + 1;
    const Relabeling rl = relabel_to_first(m, incumbent);
    const Alternatives alts = estimate_alternatives(rl.matrix, first, est);
    result.report = report_in_original_labels(reduction_report(alts), rl.perm);

    bool improved = false;
    bool cap_hit = false;
    std::vector<Vertex> original(n + 1);
    for_each_reduced_cycle(alts, [&](std::span<const Vertex> z) {
      if (examined >= cfg.max_generated_cycles) {
        cap_hit = true;
        return false;
      }
      ++examined;
      // Evaluated on the caller's matrix; the exact sum makes the value
      // independent of which rotation the cycle is walked from.
      for (std::size_t k = 0; k <= n; ++k) original[k] = rl.perm.inverse(z[k]);
      const double c = sequence_cost(m, original);
      if (c < best_cost) {
        best_cost = c;
        incumbent = Cycle::from_vertices(original).rotated_to(anchor);
        result.improvement_trace.push_back(c);
        improved = true;
        return false;
      }
      return true;
    });

    if (cap_hit) break;
    if (!improved) {
      certificate = Certificate::FixpointInReducedSpace;
      break;
    }
  }

  result.best = incumbent;
  result.cost = cycle_cost(m, incumbent);
  result.certificate = certificate;
  result.cycles_examined = examined;
  return result;
}

VerifyResult verify_optimal(const CostMatrix& m, const Cycle& claimed, const SolveConfig& cfg) {
  claimed.require_size(m.n());
  const double claimed_cost = cycle_cost(m, claimed);
  SolveResult details = frontier_solve(m, cfg, claimed);
  if (details.cost < claimed_cost) {
    Cycle better = details.best;
    return {VerifyStatus::Improved, std::move(better), std::move(details)};
  }
  const VerifyStatus status =
      details.certificate == Certificate::FixpointInReducedSpace ? VerifyStatus::ConfirmedLocal : VerifyStatus::CapExhausted;
  return {status, std::nullopt, std::move(details)};
}

// Landscape ------------------------------------------------------------------------

std::vector<LandscapeRow> landscape(const CostMatrix& m, const Cycle& ref, std::size_t cap) {
  const std::size_t n = m.n();
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap));
  }
  const Relabeling rl = relabel_to_first(m, ref);
  const std::vector<Vertex> ref_succ = descending_cycle(n).successors();
  std::vector<LandscapeRow> rows;
  rows.reserve(static_cast<std::size_t>(cycle_count(n)));
  CycleEnumerator e(n);
  while (e.next()) {
    const auto y = e.current();
    std::size_t shared = 0;
    for (std::size_t k = 0; k < n; ++k) shared += ref_succ[static_cast<std::size_t>(y[k] - 1)] == y[k + 1] ? 1 : 0;
    rows.push_back({e.offset() + 1, sequence_cost(rl.matrix, y), shared});
  }
  return rows;
}

}  // namespace gap
