#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"
#include "gap/enumeration.hpp"
#include "gap/reduction.hpp"

namespace gap {

struct SolveConfig {
  double eps_lo = -0.9;   ///< where each vertex's eps search starts
  double eps_hi = 0.6;    ///< every vertex admits at least the neighbours up to this eps
  double eps_step = 0.01;
  std::uint64_t max_generated_cycles = 50'000'000;
  std::size_t max_outer_iterations = 10'000;
  std::size_t max_eps_iterations = 10'000;
  std::size_t brute_force_cap = kDefaultBruteForceCap;

  /// Throws InvalidArgument.
  void validate() const;
};

enum class Certificate { ExactByBruteForce, FixpointInReducedSpace, CapExhausted };

std::string_view to_string(Certificate c);

struct SolveResult {
  Cycle best;  ///< starts at vertex n
  double cost = 0.0;
  Certificate certificate = Certificate::CapExhausted;
  ReductionReport report;  ///< last reduced space, original labels
  BigNat cycles_examined;
  std::optional<BigNat> best_rank;          ///< brute force only
  std::size_t outer_iterations = 0;         ///< frontier loop passes
  std::vector<double> improvement_trace;    ///< best cost after each accepted change
};

struct BruteForceOptions {
  std::size_t cap = kDefaultBruteForceCap;
  unsigned threads = 1;
  /// Cut partial paths whose cost already reaches the incumbent. Only sound
  /// for non-negative costs, so only allowed on TSP and Euclidean matrices.
  bool prune = false;
};

/// Evaluates every cycle; ties go to the lowest rank. The rank range is split
/// into `threads` contiguous parts merged by (cost, rank), so the result does
/// not depend on the thread count. Throws CapExceeded, InvalidArgument.
SolveResult brute_force_solve(const CostMatrix& m, const BruteForceOptions& options = {});

/// Calls visit(sequence) for every Hamiltonian cycle, anchored at n, whose
/// edges are all admissible; successors are tried in ascending order.
/// Stops early when visit returns false. Returns the number of cycles visited.
std::uint64_t for_each_reduced_cycle(const Alternatives& alts,
                                     const std::function<bool(std::span<const Vertex>)>& visit);

/// Materialized form of for_each_reduced_cycle (at most `limit` cycles).
std::vector<Cycle> generate_reduced_cycles(const Alternatives& alts, std::uint64_t limit = UINT64_MAX);

/// Greedy start (or `seed`), then repeatedly: relabel so the incumbent is
/// (n, ..., 1, n), estimate alternatives, and stream the reduced cycles until
/// one is strictly cheaper; a pass with no improvement ends the loop with
/// FixpointInReducedSpace. Results are in the caller's labels.
SolveResult frontier_solve(const CostMatrix& m, const SolveConfig& cfg = {}, std::optional<Cycle> seed = std::nullopt);

enum class VerifyStatus { ConfirmedLocal, Improved, CapExhausted };

std::string_view to_string(VerifyStatus s);

struct VerifyResult {
  VerifyStatus status;
  std::optional<Cycle> improved;  ///< strictly cheaper cycle when Improved
  SolveResult details;
};

/// The frontier loop seeded with `claimed`. Throws InvalidCycle.
VerifyResult verify_optimal(const CostMatrix& m, const Cycle& claimed, const SolveConfig& cfg = {});

struct LandscapeRow {
  std::uint64_t rank = 0;
  double cost = 0.0;
  std::size_t shared_edges = 0;
  friend bool operator==(const LandscapeRow&, const LandscapeRow&) = default;
};

/// One row per rank of the matrix relabeled so `ref` is rank 1; shared edges
/// are counted against ref. Throws CapExceeded.
std::vector<LandscapeRow> landscape(const CostMatrix& m, const Cycle& ref, std::size_t cap = kDefaultBruteForceCap);

}  // namespace gap
