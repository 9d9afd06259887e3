#include "gap/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "gap/error.hpp"

namespace gap {

std::size_t EdgeMarks::row_count(Vertex v) const noexcept {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n_; ++j) count += marks_[static_cast<std::size_t>(v - 1) * n_ + j];
  return count;
}

double admission_threshold(double reference_cost, double eps) {
  if (eps == kInfinity || is_pos_inf(reference_cost)) return kInfinity;
  return std::max(reference_cost * (1.0 - eps), reference_cost * (1.0 + eps));
}

double estimation_threshold(double reference_cost, double eps) {
  if (eps == kInfinity || is_pos_inf(reference_cost)) return kInfinity;
  return reference_cost + std::fabs(reference_cost) * eps;
}

EdgeMarks admissible_edges(const CostMatrix& m, const Cycle& y, std::span<const double> eps) {
  const std::size_t n = m.n();
  y.require_size(n);
  if (eps.size() != n) throw Error(ErrorCode::SizeMismatch, "need one eps per vertex");
  EdgeMarks marks(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = y[k];
    const Vertex succ = y[k + 1];
    const double e = eps[static_cast<std::size_t>(v - 1)];
    if (std::isnan(e) || e < -1.0) throw Error(ErrorCode::InvalidArgument, "eps must be >= -1");
    const double threshold = admission_threshold(m(v, succ), e);
    for (Vertex j = 1; j <= static_cast<Vertex>(n); ++j) {
      if (j != v && m(v, j) <= threshold) marks.set(v, j);
    }
    marks.set(v, succ);
  }
  return marks;
}

SpaceSize research_space_size(const EdgeMarks& marks) {
  const std::size_t n = marks.n();
  SpaceSize out{1, 0.0, std::vector<std::uint64_t>(n)};
  double log_sum = 0.0;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    const std::uint64_t a = std::max<std::uint64_t>(1, marks.row_count(v));
    out.a[static_cast<std::size_t>(v - 1)] = a;
    out.A *= a;
    log_sum += std::log2(static_cast<double>(a));
  }
  out.p = log_sum / std::log2(static_cast<double>(n));
  return out;
}

// Alternatives -----------------------------------------------------------------

Alternatives Alternatives::create(Cycle reference, std::vector<std::vector<Vertex>> successors, std::vector<double> eps,
                                  std::vector<std::uint8_t> converged) {
  const std::size_t n = reference.n();
  if (successors.size() != n || eps.size() != n) throw Error(ErrorCode::SizeMismatch, "need one set and one eps per vertex");
  if (converged.empty()) converged.assign(n, 1);
  if (converged.size() != n) throw Error(ErrorCode::SizeMismatch, "need one convergence flag per vertex");
  const std::vector<Vertex> ref_succ = reference.successors();
  for (std::size_t i = 0; i < n; ++i) {
    auto& set = successors[i];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const auto v = static_cast<Vertex>(i + 1);
    if (set.empty()) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has no alternatives");
    for (Vertex j : set) {
      if (j < 1 || static_cast<std::size_t>(j) > n || j == v) {
        throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has an invalid alternative");
      }
    }
    if (!std::binary_search(set.begin(), set.end(), ref_succ[i])) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " must keep its reference successor");
    }
    if (std::isnan(eps[i]) || eps[i] < -1.0) throw Error(ErrorCode::InvalidArgument, "eps must be >= -1");
  }
  return Alternatives(std::move(reference), std::move(successors), std::move(eps), std::move(converged));
}

Alternatives Alternatives::full(const Cycle& reference) {
  const std::size_t n = reference.n();
  std::vector<std::vector<Vertex>> sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(n); ++j) {
      if (j != static_cast<Vertex>(i + 1)) sets[i].push_back(j);
    }
  }
  return create(reference, std::move(sets), std::vector<double>(n, kInfinity));
}

Alternatives Alternatives::reference_only(const Cycle& reference) {
  const std::vector<Vertex> succ = reference.successors();
  std::vector<std::vector<Vertex>> sets(succ.size());
  for (std::size_t i = 0; i < succ.size(); ++i) sets[i] = {succ[i]};
  return create(reference, std::move(sets), std::vector<double>(succ.size(), -1.0));
}

bool Alternatives::all_converged() const noexcept {
  return std::all_of(converged_.begin(), converged_.end(), [](std::uint8_t c) { return c != 0; });
}

std::vector<std::uint64_t> Alternatives::counts() const {
  std::vector<std::uint64_t> out(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) out[i] = sets_[i].size();
  return out;
}

EdgeMarks Alternatives::marks() const {
  EdgeMarks marks(n());
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    for (Vertex j : sets_[i]) marks.set(static_cast<Vertex>(i + 1), j);
  }
  return marks;
}

// Estimation -------------------------------------------------------------------

namespace {

std::vector<Vertex> vicinity(const CostMatrix& m, Vertex v, Vertex succ, double threshold) {
  std::vector<Vertex> out;
  for (Vertex j = 1; j <= static_cast<Vertex>(m.n()); ++j) {
    if (j != v && (j == succ || m(v, j) <= threshold)) out.push_back(j);
  }
  return out;
}

}  // namespace

Alternatives estimate_alternatives(const CostMatrix& m, const Cycle& y, const EstimateOptions& options) {
  const std::size_t n = m.n();
  y.require_size(n);
  if (!(options.step > 0.0) || !std::isfinite(options.step)) throw Error(ErrorCode::InvalidArgument, "step must be > 0");
  if (!(options.eps_start >= -1.0) || !std::isfinite(options.eps_start)) {
    throw Error(ErrorCode::InvalidArgument, "eps_start must be finite and >= -1");
  }
  if (options.max_iter == 0) throw Error(ErrorCode::InvalidArgument, "max_iter must be >= 1");

  const std::vector<Vertex> succ = y.successors();
  std::vector<std::vector<Vertex>> sets(n);
  std::vector<double> eps(n);
  std::vector<std::uint8_t> converged(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    const Vertex k = succ[i];
    const double c_ref = m(v, k);
    double e = options.eps_start;
    for (std::size_t it = 0; it < options.max_iter; ++it) {
      // Recomputed from the start each time so no rounding drift accumulates.
      e = options.eps_start + static_cast<double>(it) * options.step;
      std::vector<Vertex> t = vicinity(m, v, k, estimation_threshold(c_ref, e));
      if (t.size() > 1) {
        sets[i] = std::move(t);
        converged[i] = 1;
        break;
      }
    }
    if (!converged[i]) sets[i] = {k};
    if (options.eps_floor && e < *options.eps_floor) {
      e = *options.eps_floor;
      std::vector<Vertex> widened = vicinity(m, v, k, estimation_threshold(c_ref, e));
      if (widened.size() > sets[i].size()) sets[i] = std::move(widened);
    }
    eps[i] = e;
  }
  return Alternatives::create(y, std::move(sets), std::move(eps), std::move(converged));
}

// Degrees ----------------------------------------------------------------------

namespace {

double degree_denominator(std::size_t tube_vertices, std::size_t n) {
  if (tube_vertices > n || n - tube_vertices < 2) {
    throw Error(ErrorCode::DegenerateDenominator, "n - T must be at least 2");
  }
  return std::log2(static_cast<double>(n - tube_vertices));
}

double log2_sum(std::span<const std::uint64_t> a) {
  double s = 0.0;
  for (std::uint64_t x : a) {
    if (x == 0) throw Error(ErrorCode::InvalidArgument, "alternative counts must be >= 1");
    s += std::log2(static_cast<double>(x));
  }
  return s;
}

}  // namespace

double reducibility_degree(std::span<const std::uint64_t> a, std::size_t tube_vertices, std::size_t n) {
  const double denom = degree_denominator(tube_vertices, n);
  if (a.size() != n) throw Error(ErrorCode::SizeMismatch, "need one alternative count per vertex");
  return log2_sum(a) / denom;
}

double parallel_degree(std::span<const std::vector<std::uint64_t>> clouds, std::size_t tube_vertices, std::size_t n) {
  const double denom = degree_denominator(tube_vertices, n);
  if (clouds.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one cloud");
  double best = 0.0;
  for (const auto& cloud : clouds) best = std::max(best, log2_sum(cloud));
  return best / denom;
}

Tubes detect_tubes(const Alternatives& alts) {
  const std::size_t n = alts.n();
  const Cycle& ref = alts.reference();
  std::vector<bool> thin(n);
  for (std::size_t k = 0; k < n; ++k) thin[k] = alts.successors(ref[k]).size() < 3;

  Tubes out;
  if (std::all_of(thin.begin(), thin.end(), [](bool b) { return b; })) {
    out.T = n;
    out.segments.emplace_back(ref.vertices().begin(), ref.vertices().end() - 1);
    return out;
  }
  // Start scanning just after a non-thin vertex so no run straddles the seam.
  std::size_t start = 0;
  while (thin[start]) ++start;
  std::vector<Vertex> run;
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t k = (start + step) % n;
    if (thin[k]) {
      run.push_back(ref[k]);
    } else if (!run.empty()) {
      out.T += run.size();
      out.segments.push_back(std::move(run));
      run.clear();
    }
  }
  // The scan ends on the non-thin start vertex, so `run` is empty here.
  std::sort(out.segments.begin(), out.segments.end(), [&](const auto& a, const auto& b) {
    auto pos = [&](Vertex v) {
      for (std::size_t k = 0; k < n; ++k) {
        if (ref[k] == v) return k;
      }
      return n;
    };
    return pos(a.front()) < pos(b.front());
  });
  return out;
}

ReductionReport reduction_report(const Alternatives& alts) {
  const SpaceSize size = research_space_size(alts.marks());
  Tubes tubes = detect_tubes(alts);
  ReductionReport r;
  r.A = size.A;
  r.p = size.p;
  r.a = size.a;
  r.eps.assign(alts.eps().begin(), alts.eps().end());
  r.T = tubes.T;
  r.tubes = std::move(tubes.segments);
  const std::size_t n = alts.n();
  if (r.T <= n && n - r.T >= 2) {
    std::vector<std::uint64_t> a = r.a;
    for (const auto& seg : r.tubes) {
      for (Vertex v : seg) a[static_cast<std::size_t>(v - 1)] = 1;
    }
    r.p_tubes = reducibility_degree(a, r.T, n);
  }
  return r;
}

std::string report_to_json(const ReductionReport& report) {
  nlohmann::ordered_json j;
  j["A"] = report.A.str();
  j["p"] = report.p;
  j["a"] = report.a;
  nlohmann::ordered_json eps = nlohmann::ordered_json::array();
  for (double e : report.eps) {
    // JSON has no infinity literal.
    if (std::isfinite(e)) eps.push_back(e);
    else eps.push_back("inf");
  }
  j["eps"] = std::move(eps);
  j["T"] = report.T;
  j["tubes"] = report.tubes;
  if (report.p_tubes) j["p_tubes"] = *report.p_tubes;
  else j["p_tubes"] = nullptr;
  return j.dump();
}

}  // namespace gap
