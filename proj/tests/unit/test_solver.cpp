#include <doctest.h>

#include <algorithm>
#include <set>

#include "../fixtures.hpp"
#include "../oracle.hpp"
#include "gap/enumeration.hpp"
#include "gap/instance.hpp"
#include "gap/solver.hpp"
#include "gap/sorted_m.hpp"

using namespace gap;
using fx::I;

namespace {

Cycle cycle_of(const oracle::Seq& s) { return Cycle::from_vertices({s.begin(), s.end()}); }

SolveConfig full_space() {
  SolveConfig cfg;
  cfg.eps_hi = I;
  return cfg;
}

CostMatrix mixed(std::size_t n, std::uint64_t seed) {
  return seed % 2 ? gen_random_gap(n, seed, -1, 1) : fx::euclid(n, seed);
}

}  // namespace

TEST_CASE("brute force basics") {
  const SolveResult two = brute_force_solve(fx::gap_matrix({{I, 3}, {4, I}}));
  CHECK(two.best.to_string() == "2,1,2");
  CHECK(two.cost == 7);
  CHECK(two.certificate == Certificate::ExactByBruteForce);
  CHECK(two.cycles_examined == 1);

  const SolveResult uni = brute_force_solve(fx::gap_matrix({{I, 2, 2, 2}, {2, I, 2, 2}, {2, 2, I, 2}, {2, 2, 2, I}}));
  CHECK(uni.cost == 8);
  CHECK(uni.best_rank == BigNat(1));
  CHECK(uni.best.to_string() == "4,3,2,1,4");

  const SolveResult u5 = brute_force_solve(gen_unique_cost(5));
  CHECK(u5.best_rank == BigNat(21));
  CHECK(u5.best.to_string() == "5,1,3,4,2,5");
  CHECK(u5.cost == 972);
  CHECK(u5.cycles_examined == 24);

  CHECK(fx::code_of([] { brute_force_solve(gen_random_gap(12, 1, 0, 1)); }) == ErrorCode::CapExceeded);
  BruteForceOptions opt;
  opt.cap = 5;
  CHECK(fx::code_of([&] { brute_force_solve(gen_random_gap(6, 1, 0, 1), opt); }) == ErrorCode::CapExceeded);
}

TEST_CASE("brute force agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const CostMatrix m = mixed(n, seed);
    const SolveResult r = brute_force_solve(m);
    const oracle::Best b = oracle::brute_min(m);
    CHECK(r.best == cycle_of(b.cycle));
    CHECK(r.best_rank == BigNat(b.index + 1));
    CHECK(r.cost == cycle_cost(m, r.best));
    CHECK(static_cast<long double>(r.cost) == doctest::Approx(static_cast<double>(b.cost)).epsilon(1e-12));
  }
}

TEST_CASE("brute force is independent of the thread count and pruning") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const CostMatrix m = mixed(8, seed);
    const SolveResult one = brute_force_solve(m);
    for (unsigned k : {2u, 4u, 8u}) {
      BruteForceOptions opt;
      opt.threads = k;
      const SolveResult r = brute_force_solve(m, opt);
      CHECK(r.best == one.best);
      CHECK(r.cost == one.cost);
      CHECK(r.best_rank == one.best_rank);
    }
    BruteForceOptions pr;
    pr.prune = true;
    if (m.kind() == MatrixKind::Euclidean2d) {
      const SolveResult p = brute_force_solve(m, pr);
      CHECK(p.cost == one.cost);
      CHECK(p.best == one.best);
      pr.threads = 3;
      CHECK(brute_force_solve(m, pr).best == one.best);
    } else {
      CHECK(fx::code_of([&] { brute_force_solve(m, pr); }) == ErrorCode::InvalidArgument);
    }
  }
  // Ties: the lowest rank wins under every split.
  const CostMatrix w = fx::tsp_matrix(
      {{I, 1, 1, 1, 1, 1}, {1, I, 1, 1, 1, 1}, {1, 1, I, 1, 1, 1}, {1, 1, 1, I, 1, 1}, {1, 1, 1, 1, I, 1}, {1, 1, 1, 1, 1, I}});
  for (unsigned k : {1u, 2u, 4u, 8u}) {
    BruteForceOptions opt;
    opt.threads = k;
    CHECK(brute_force_solve(w, opt).best_rank == BigNat(1));
    opt.prune = true;
    CHECK(brute_force_solve(w, opt).best_rank == BigNat(1));
  }
}

TEST_CASE("generate_reduced_cycles") {
  for (std::size_t n = 2; n <= 7; ++n) {
    const Cycle ref = unrank(BigNat(1), n);
    const auto full = generate_reduced_cycles(Alternatives::full(ref));
    const auto all = enumerate_all(n);
    REQUIRE(full.size() == all.size());
    std::set<std::string> a, b;
    for (const Cycle& c : full) a.insert(c.to_string());
    for (const Cycle& c : all) b.insert(c.to_string());
    CHECK(a == b);
    CHECK(a.size() == full.size());
  }
  const Cycle y = Cycle::parse("3,6,1,4,2,5,3");
  const auto only = generate_reduced_cycles(Alternatives::reference_only(y));
  REQUIRE(only.size() == 1);
  CHECK(only[0] == y.rotated_to(6));
  CHECK(generate_reduced_cycles(Alternatives::full(y), 10).size() == 10);

  std::uint64_t visits = 0;
  const std::uint64_t seen = for_each_reduced_cycle(Alternatives::full(y), [&](std::span<const Vertex>) {
    return ++visits < 7;
  });
  CHECK(seen == 7);
}

TEST_CASE("frontier_solve over the full space matches brute force") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const CostMatrix m = mixed(n, seed);
    const SolveResult f = frontier_solve(m, full_space());
    const SolveResult b = brute_force_solve(m);
    CHECK(f.cost == b.cost);
    CHECK(f.cost == cycle_cost(m, f.best));
    CHECK(f.certificate == Certificate::FixpointInReducedSpace);
  }
}

TEST_CASE("frontier_solve contract") {
  const CostMatrix line = fx::points({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
  const SolveResult l = frontier_solve(line);
  CHECK(l.outer_iterations == 1);
  CHECK(l.improvement_trace.size() == 1);
  CHECK(l.cost == brute_force_solve(line).cost);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 5 + seed % 5;
    const CostMatrix m = mixed(n, seed);
    const SolveResult r = frontier_solve(m);
    CHECK(r.cost == cycle_cost(m, r.best));
    CHECK(r.best.front() == static_cast<Vertex>(n));
    CHECK(r.certificate != Certificate::ExactByBruteForce);
    CHECK_FALSE(r.best_rank.has_value());
    CHECK(r.improvement_trace.back() == r.cost);
    for (std::size_t k = 1; k < r.improvement_trace.size(); ++k) {
      CHECK(r.improvement_trace[k] < r.improvement_trace[k - 1]);
    }
    CHECK(r.outer_iterations == r.improvement_trace.size());
    const SolveResult again = frontier_solve(m);
    CHECK(again.best == r.best);
    CHECK(again.cycles_examined == r.cycles_examined);
    const Cycle greedy = greedy_initial_cycle(SortedM(m), static_cast<Vertex>(n));
    CHECK(r.cost <= cycle_cost(m, greedy));
  }
}

TEST_CASE("frontier_solve caps") {
  const CostMatrix m = gen_random_gap(9, 4, 0, 1);
  SolveConfig cfg = full_space();
  cfg.max_generated_cycles = 5;
  CHECK(frontier_solve(m, cfg).certificate == Certificate::CapExhausted);
  cfg = full_space();
  cfg.max_outer_iterations = 1;
  const SolveResult one = frontier_solve(m, cfg);
  CHECK(one.outer_iterations <= 1);

  SolveConfig bad;
  bad.eps_lo = 1;
  bad.eps_hi = 0;
  CHECK(fx::code_of([&] { frontier_solve(m, bad); }) == ErrorCode::InvalidArgument);
  bad = SolveConfig{};
  bad.eps_step = 0;
  CHECK(fx::code_of([&] { frontier_solve(m, bad); }) == ErrorCode::InvalidArgument);
  bad = SolveConfig{};
  bad.max_generated_cycles = 0;
  CHECK(fx::code_of([&] { frontier_solve(m, bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("frontier_solve seeded") {
  const CostMatrix m = gen_random_gap(7, 8, 0, 1);
  const Cycle seed = Cycle::parse("1,2,3,4,5,6,7,1");
  const SolveResult r = frontier_solve(m, full_space(), seed);
  CHECK(r.improvement_trace.front() == cycle_cost(m, seed));
  CHECK(r.cost == brute_force_solve(m).cost);
  CHECK(fx::code_of([&] { frontier_solve(m, {}, Cycle::parse("1,2,1")); }) == ErrorCode::InvalidCycle);
}

TEST_CASE("verify_optimal") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 3 + seed % 6;
    const CostMatrix m = mixed(n, seed);
    const SolveResult b = brute_force_solve(m);
    const VerifyResult v = verify_optimal(m, b.best);
    CHECK(v.status != VerifyStatus::Improved);
    CHECK_FALSE(v.improved.has_value());

    const auto all = oracle::all_cycles(static_cast<int>(n));
    const auto worst = *std::max_element(all.begin(), all.end(), [&](const auto& x, const auto& y) {
      return oracle::naive_cost(m, x) < oracle::naive_cost(m, y);
    });
    // Symmetric n = 3 has two cycles of equal cost.
    if (cycle_cost(m, cycle_of(worst)) == b.cost) continue;
    // Default bounds only certify locally; the full space must find something better.
    const VerifyResult w = verify_optimal(m, cycle_of(worst), full_space());
    INFO("seed " << seed);
    REQUIRE(w.status == VerifyStatus::Improved);
    CHECK(cycle_cost(m, *w.improved) < cycle_cost(m, cycle_of(worst)));
  }
  // Around this cycle the default reduced space holds nothing else.
  const CostMatrix g41 = gen_random_gap(4, 1, -1, 1);
  const VerifyResult local = verify_optimal(g41, Cycle::parse("4,3,1,2,4"));
  CHECK(local.status == VerifyStatus::ConfirmedLocal);
  CHECK(local.details.cycles_examined == 1);

  const VerifyResult two = verify_optimal(fx::gap_matrix({{I, 1}, {5, I}}), Cycle::parse("1,2,1"));
  CHECK(two.status == VerifyStatus::ConfirmedLocal);
  CHECK(to_string(VerifyStatus::ConfirmedLocal) == "ConfirmedLocal");
  CHECK(fx::code_of([] { verify_optimal(gen_random_gap(4, 1, 0, 1), Cycle::parse("1,2,3,1")); }) ==
        ErrorCode::InvalidCycle);
}

TEST_CASE("landscape") {
  const CostMatrix m = gen_random_gap(6, 21, -1, 1);
  const Cycle ref = Cycle::parse("2,5,1,6,3,4,2");
  const auto rows = landscape(m, ref);
  REQUIRE(rows.size() == 120);
  CHECK(rows[0].rank == 1);
  CHECK(rows[0].cost == cycle_cost(m, ref));
  CHECK(rows[0].shared_edges == 6);
  double lo = rows[0].cost;
  std::vector<std::uint64_t> buckets(7, 0);
  for (const LandscapeRow& r : rows) {
    lo = std::min(lo, r.cost);
    ++buckets[r.shared_edges];
  }
  CHECK(lo == brute_force_solve(m).cost);
  CHECK(buckets == coincidence_histogram(6, ref));
  CHECK(fx::code_of([] { landscape(gen_random_gap(12, 1, 0, 1), unrank(BigNat(1), 12)); }) == ErrorCode::CapExceeded);
}
