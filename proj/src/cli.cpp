#include "gap/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "gap/enumeration.hpp"
#include "gap/error.hpp"
#include "gap/instance.hpp"
#include "gap/instance_io.hpp"
#include "gap/ipgap.hpp"
#include "gap/reduction.hpp"
#include "gap/solver.hpp"
#include "gap/sorted_m.hpp"
#include "gap/viz.hpp"

#ifndef GAPCYCLE_VERSION
#define GAPCYCLE_VERSION "0.0.0"
#endif

namespace gap {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

namespace {

using json = nlohmann::ordered_json;

// Everything a command read and wrote, for the manifest.
struct Run {
  std::string input_bytes;
  std::map<std::string, std::string> outputs;  // name -> bytes
};

double parse_eps(const std::string& text) {
  if (text == "inf" || text == "+inf") return kInfinity;
  double v = 0.0;
  std::size_t used = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || std::isnan(v)) throw Error(ErrorCode::InvalidArgument, "bad eps value '" + text + "'");
  return v;
}

// A cycle given either as a file path or inline as "5,4,3,2,1,5".
Cycle load_cycle(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_cycle(arg);
  return Cycle::parse(arg);
}

CostMatrix load_instance(const std::string& path, Run& run) {
  run.input_bytes = read_text_file(path);
  return parse_instance(run.input_bytes);
}

void emit(Run& run, const std::string& path, std::string bytes) {
  run.outputs[path.empty() ? "stdout" : path] = std::move(bytes);
}

json real_json(double x) {
  if (is_pos_inf(x)) return "inf";
  return x;
}

json result_json(const SolveResult& r) {
  json j;
  j["cycle"] = r.best.to_string();
  j["cost"] = real_json(r.cost);
  j["certificate"] = std::string(to_string(r.certificate));
  j["cycles_examined"] = r.cycles_examined.str();
  j["rank"] = r.best_rank ? json(r.best_rank->str()) : json(nullptr);
  j["outer_iterations"] = r.outer_iterations;
  json trace = json::array();
  for (double c : r.improvement_trace) trace.push_back(real_json(c));
  j["improvement_trace"] = trace;
  j["report"] = json::parse(report_to_json(r.report));
  return j;
}

// Options every command records in its manifest, in declaration order.
json collect_flags(const CLI::App& sub) {
  json flags = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name();
    if (name == "--help" || name.empty() || opt->count() == 0) continue;
    const auto& results = opt->results();
    if (results.size() == 1) {
      flags[name] = results.front();
    } else {
      flags[name] = results;
    }
  }
  return flags;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonian-cycle enumeration, reduction and frontier search for GAP/TSP instances", "gapcli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GAPCYCLE_VERSION);

  std::string manifest_path;
  std::uint64_t seed = 0;
  std::string instance_path, output_path, cycle_arg;
  Run run;
  std::function<void()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--manifest", manifest_path, "write a JSON run manifest to this path");
  };
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance_path, "instance file")->required();
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string kind = "random-gap";
  std::size_t gen_n = 0;
  double lo = 0.0, hi = 1.0;
  gen->add_option("--kind", kind)->check(CLI::IsMember({"random-gap", "euclidean", "unique-cost"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--lo", lo);
  gen->add_option("--hi", hi);
  gen->add_option("-o,--output", output_path);
  add_common(gen);
  gen->callback([&] {
    action = [&] {
      CostMatrix m = kind == "euclidean"     ? CostMatrix::from_points(gen_random_points(gen_n, seed))
                     : kind == "unique-cost" ? gen_unique_cost(gen_n)
                                             : gen_random_gap(gen_n, seed, lo, hi);
      emit(run, output_path, format_instance(m));
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "find a cheapest Hamiltonian cycle");
  std::string method = "frontier";
  std::string eps_lo = "-0.9", eps_hi = "0.6";
  SolveConfig cfg;
  BruteForceOptions brute;
  add_instance(solve);
  solve->add_option("--method", method)->check(CLI::IsMember({"brute", "frontier"}));
  solve->add_option("--eps-lo", eps_lo);
  solve->add_option("--eps-hi", eps_hi, "eps floor, or inf for the full space");
  solve->add_option("--eps-step", cfg.eps_step);
  solve->add_option("--max-cycles", cfg.max_generated_cycles);
  solve->add_option("--threads", brute.threads)->check(CLI::Range(1u, 1024u));
  solve->add_option("--cap", brute.cap);
  solve->add_flag("--prune", brute.prune, "cut partial paths (TSP and Euclidean only)");
  solve->add_option("--seed-cycle", cycle_arg, "starting cycle for the frontier method");
  solve->add_option("-o,--output", output_path);
  add_common(solve);
  solve->callback([&] {
    action = [&] {
      const CostMatrix m = load_instance(instance_path, run);
      if (method == "brute") {
        emit(run, output_path, result_json(brute_force_solve(m, brute)).dump(2) + "\n");
        return;
      }
      cfg.eps_lo = parse_eps(eps_lo);
      cfg.eps_hi = parse_eps(eps_hi);
      cfg.brute_force_cap = brute.cap;
      std::optional<Cycle> start;
      if (!cycle_arg.empty()) start = load_cycle(cycle_arg);
      emit(run, output_path, result_json(frontier_solve(m, cfg, start)).dump(2) + "\n");
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a claimed optimum against the frontier condition");
  add_instance(verify);
  verify->add_option("--cycle", cycle_arg, "claimed cycle (file or inline)")->required();
  verify->add_option("--eps-lo", eps_lo);
  verify->add_option("--eps-hi", eps_hi);
  verify->add_option("--eps-step", cfg.eps_step);
  verify->add_option("--max-cycles", cfg.max_generated_cycles);
  verify->add_option("-o,--output", output_path);
  add_common(verify);
  verify->callback([&] {
    action = [&] {
      const CostMatrix m = load_instance(instance_path, run);
      cfg.eps_lo = parse_eps(eps_lo);
      cfg.eps_hi = parse_eps(eps_hi);
      const Cycle claimed = load_cycle(cycle_arg);
      const VerifyResult v = verify_optimal(m, claimed, cfg);
      json j;
      j["status"] = std::string(to_string(v.status));
      j["claimed_cost"] = real_json(cycle_cost(m, claimed));
      j["improved"] = v.improved ? json(v.improved->to_string()) : json(nullptr);
      j["improved_cost"] = v.improved ? real_json(cycle_cost(m, *v.improved)) : json(nullptr);
      j["cycles_examined"] = v.details.cycles_examined.str();
      emit(run, output_path, j.dump(2) + "\n");
    };
  });

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "rank of a cycle anchored at n");
  rank_cmd->add_option("--cycle", cycle_arg, "cycle (file or inline)")->required();
  add_common(rank_cmd);
  rank_cmd->callback([&] {
    action = [&] { emit(run, "", rank(load_cycle(cycle_arg)).value().str() + "\n"); };
  });

  // unrank
  auto* unrank_cmd = app.add_subcommand("unrank", "cycle with the given rank");
  std::string j_text;
  std::size_t un_n = 0;
  unrank_cmd->add_option("--j", j_text, "1-based rank")->required();
  unrank_cmd->add_option("--n", un_n)->required();
  add_common(unrank_cmd);
  unrank_cmd->callback([&] {
    action = [&] {
      BigNat j;
      try {
        j = BigNat(j_text);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "bad rank '" + j_text + "'");
      }
      emit(run, "", unrank(Rank(j, un_n)).to_string() + "\n");
    };
  });

  // sortedm
  auto* sortedm = app.add_subcommand("sortedm", "print each row sorted by cost as cost:vertex pairs");
  add_instance(sortedm);
  sortedm->add_option("-o,--output", output_path);
  add_common(sortedm);
  sortedm->callback([&] {
    action = [&] {
      const SortedM s(load_instance(instance_path, run));
      std::string text;
      for (Vertex v = 1; v <= static_cast<Vertex>(s.n()); ++v) {
        bool first = true;
        for (const SortedEntry& e : s.row(v)) {
          if (!first) text += ' ';
          first = false;
          text += format_real(e.cost) + ":" + std::to_string(e.vertex);
        }
        text += '\n';
      }
      emit(run, output_path, std::move(text));
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "estimate alternatives around a cycle and report the reduced space");
  add_instance(reduce);
  reduce->add_option("--cycle", cycle_arg, "reference cycle (default: greedy from vertex n)");
  reduce->add_option("--eps-lo", eps_lo);
  reduce->add_option("--eps-hi", eps_hi);
  reduce->add_option("--eps-step", cfg.eps_step);
  reduce->add_option("-o,--output", output_path);
  add_common(reduce);
  reduce->callback([&] {
    action = [&] {
      const CostMatrix m = load_instance(instance_path, run);
      const Cycle y = cycle_arg.empty() ? greedy_initial_cycle(SortedM(m), static_cast<Vertex>(m.n()))
                                        : load_cycle(cycle_arg);
      EstimateOptions est;
      est.eps_start = parse_eps(eps_lo);
      est.step = cfg.eps_step;
      const double floor = parse_eps(eps_hi);
      est.eps_floor = floor;
      emit(run, output_path, report_to_json(reduction_report(estimate_alternatives(m, y, est))) + "\n");
    };
  });

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "write the assignment model in LP format");
  add_instance(lp);
  lp->add_option("-o,--output", output_path);
  add_common(lp);
  lp->callback([&] {
    action = [&] { emit(run, output_path, export_lp(build_model(load_instance(instance_path, run)))); };
  });

  // render
  auto* render = app.add_subcommand("render", "render the matrix or sorted structure as PGM/PPM");
  std::string what = "matrix";
  std::string candidate_arg;
  add_instance(render);
  render->add_option("--what", what)->check(CLI::IsMember({"matrix", "sorted", "vertex"}));
  render->add_option("--cycle", cycle_arg, "frontier cycle for --what sorted (default: greedy from vertex n)");
  render->add_option("--candidate", candidate_arg, "cycle drawn green for --what sorted");
  render->add_option("-o,--output", output_path)->required();
  add_common(render);
  render->callback([&] {
    action = [&] {
      const CostMatrix m = load_instance(instance_path, run);
      if (what == "matrix") {
        emit(run, output_path, to_pgm(render_cost_matrix(m)));
        return;
      }
      const SortedM s(m);
      if (what == "vertex") {
        emit(run, output_path, to_pgm(render_vertex_index(s)));
        return;
      }
      const Cycle y = cycle_arg.empty() ? greedy_initial_cycle(s, static_cast<Vertex>(m.n())) : load_cycle(cycle_arg);
      std::optional<Cycle> cand;
      if (!candidate_arg.empty()) cand = load_cycle(candidate_arg);
      emit(run, output_path, to_ppm(render_sorted_m(s, frontier_of(s, y), cand)));
    };
  });

  // landscape
  auto* land = app.add_subcommand("landscape", "cost and shared edges of every cycle against a reference");
  std::size_t land_cap = kDefaultBruteForceCap;
  add_instance(land);
  land->add_option("--cycle", cycle_arg, "reference cycle (default: n,...,1,n)");
  land->add_option("--cap", land_cap);
  land->add_option("-o,--output", output_path);
  add_common(land);
  land->callback([&] {
    action = [&] {
      const CostMatrix m = load_instance(instance_path, run);
      const Cycle ref = cycle_arg.empty() ? unrank(BigNat(1), m.n()) : load_cycle(cycle_arg);
      const auto rows = landscape(m, ref, land_cap);
      emit(run, output_path, export_landscape_csv(rows));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    action();
    for (const auto& [name, bytes] : run.outputs) {
      if (name == "stdout") {
        out << bytes;
      } else {
        write_text_file(name, bytes);
      }
    }
    if (!manifest_path.empty()) {
      const CLI::App* sub = app.get_subcommands().front();
      json m;
      m["command"] = sub->get_name();
      m["flags"] = collect_flags(*sub);
      m["seed"] = seed;
      m["version"] = GAPCYCLE_VERSION;
      m["input_digest"] = run.input_bytes.empty() ? json(nullptr) : json(sha256_hex(run.input_bytes));
      json digests = json::object();
      for (const auto& [name, bytes] : run.outputs) digests[name] = sha256_hex(bytes);
      m["output_digests"] = digests;
      write_text_file(manifest_path, m.dump(2) + "\n");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gap
