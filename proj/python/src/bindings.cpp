#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gap/enumeration.hpp"
#include "gap/error.hpp"
#include "gap/instance.hpp"
#include "gap/instance_io.hpp"
#include "gap/ipgap.hpp"
#include "gap/reduction.hpp"
#include "gap/solver.hpp"
#include "gap/sorted_m.hpp"
#include "gap/viz.hpp"

namespace py = pybind11;
using namespace gap;

namespace {

py::int_ to_py(const BigNat& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigNat from_py(const py::int_& x) {
  const std::string s = py::str(x);
  if (!s.empty() && s[0] == '-') throw Error(ErrorCode::RankOutOfRange, "rank must be positive");
  return BigNat(s);
}

Cycle to_cycle(const std::vector<Vertex>& v) { return Cycle::from_vertices(v); }

std::vector<Vertex> from_cycle(const Cycle& c) { return {c.vertices().begin(), c.vertices().end()}; }

MatrixKind parse_kind(const std::string& k) {
  if (k == "gap") return MatrixKind::ArbitraryGap;
  if (k == "tsp") return MatrixKind::SymmetricTsp;
  throw Error(ErrorCode::InvalidArgument, "kind must be 'gap' or 'tsp'");
}

py::dict report_dict(const ReductionReport& r) {
  py::dict d;
  d["A"] = to_py(r.A);
  d["p"] = r.p;
  d["a"] = r.a;
  d["eps"] = r.eps;
  d["T"] = r.T;
  d["tubes"] = r.tubes;
  d["p_tubes"] = r.p_tubes;
  return d;
}

py::dict result_dict(const SolveResult& r) {
  py::dict d;
  d["cycle"] = from_cycle(r.best);
  d["cost"] = r.cost;
  d["certificate"] = std::string(to_string(r.certificate));
  d["cycles_examined"] = to_py(r.cycles_examined);
  d["rank"] = r.best_rank ? py::object(to_py(*r.best_rank)) : py::object(py::none());
  d["outer_iterations"] = r.outer_iterations;
  d["improvement_trace"] = r.improvement_trace;
  d["report"] = report_dict(r.report);
  return d;
}

SolveConfig make_config(double eps_lo, double eps_hi, double eps_step, std::uint64_t max_cycles) {
  SolveConfig cfg;
  cfg.eps_lo = eps_lo;
  cfg.eps_hi = eps_hi;
  cfg.eps_step = eps_step;
  cfg.max_generated_cycles = max_cycles;
  return cfg;
}

py::bytes render(const CostMatrix& m, const std::string& what, const std::optional<std::vector<Vertex>>& cycle,
                 const std::optional<std::vector<Vertex>>& candidate) {
  if (what == "matrix") return py::bytes(to_pgm(render_cost_matrix(m)));
  const SortedM s(m);
  if (what == "vertex") return py::bytes(to_pgm(render_vertex_index(s)));
  if (what != "sorted") throw Error(ErrorCode::InvalidArgument, "what must be matrix, sorted or vertex");
  const Cycle ref = cycle ? to_cycle(*cycle) : unrank(BigNat(1), m.n());
  std::optional<Cycle> cand;
  if (candidate) cand = to_cycle(*candidate);
  std::string img;
  {
    py::gil_scoped_release release;
    img = to_ppm(render_sorted_m(s, frontier_of(s, ref), cand));
  }
  return py::bytes(img);
}

}  // namespace

PYBIND11_MODULE(_gapcycle, mod) {
  mod.doc() = "Exact and frontier solvers for small general assignment cycle problems.";

  static py::exception<Error> gap_error(mod, "GapError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = gap_error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(gap_error.ptr(), inst.ptr());
    }
  });

  py::class_<CostMatrix>(mod, "CostMatrix")
      .def(py::init([](const std::vector<std::vector<double>>& rows, const std::string& kind) {
             return CostMatrix::create(rows, parse_kind(kind));
           }),
           py::arg("rows"), py::arg("kind") = "gap")
      .def_static(
          "from_points",
          [](const std::vector<std::pair<double, double>>& pts) {
            std::vector<Point2> p;
            for (const auto& [x, y] : pts) p.push_back({x, y});
            return CostMatrix::from_points(PointSet::create(std::move(p)));
          },
          py::arg("points"))
      .def_static("parse", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
      .def_static("load", [](const std::string& path) { return parse_instance(read_text_file(path)); }, py::arg("path"))
      .def("format", [](const CostMatrix& m) { return format_instance(m); })
      .def_property_readonly("n", &CostMatrix::n)
      .def_property_readonly("kind", [](const CostMatrix& m) { return std::string(to_string(m.kind())); })
      .def("rows",
           [](const CostMatrix& m) {
             std::vector<std::vector<double>> out;
             for (Vertex i = 1; i <= static_cast<Vertex>(m.n()); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
             return out;
           })
      .def("__call__", [](const CostMatrix& m, Vertex i, Vertex j) {
        if (i < 1 || j < 1 || i > static_cast<Vertex>(m.n()) || j > static_cast<Vertex>(m.n())) {
          throw Error(ErrorCode::InvalidArgument, "vertex out of range");
        }
        return m(i, j);
      })
      .def(py::self == py::self)
      .def("__repr__", [](const CostMatrix& m) {
        return "<CostMatrix n=" + std::to_string(m.n()) + " kind=" + std::string(to_string(m.kind())) + ">";
      });

  mod.def("gen_random_gap", &gen_random_gap, py::arg("n"), py::arg("seed"), py::arg("lo") = 0.0, py::arg("hi") = 1.0);
  mod.def(
      "gen_euclidean", [](std::size_t n, std::uint64_t seed) { return CostMatrix::from_points(gen_random_points(n, seed)); },
      py::arg("n"), py::arg("seed"));
  mod.def("gen_unique_cost", &gen_unique_cost, py::arg("n"));

  mod.def(
      "cycle_cost", [](const CostMatrix& m, const std::vector<Vertex>& c) { return cycle_cost(m, to_cycle(c)); },
      py::arg("m"), py::arg("cycle"));
  mod.def(
      "rank", [](const std::vector<Vertex>& c) { return to_py(rank(to_cycle(c)).value()); }, py::arg("cycle"));
  mod.def(
      "unrank", [](const py::int_& j, std::size_t n) { return from_cycle(unrank(from_py(j), n)); }, py::arg("j"),
      py::arg("n"));
  mod.def(
      "cycle_count", [](std::size_t n) { return to_py(cycle_count(n)); }, py::arg("n"));
  mod.def(
      "shared_edges",
      [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) { return shared_edges(to_cycle(a), to_cycle(b)); },
      py::arg("a"), py::arg("b"));
  mod.def(
      "coincidence_histogram",
      [](std::size_t n, const std::vector<Vertex>& ref) { return coincidence_histogram(n, to_cycle(ref)); },
      py::arg("n"), py::arg("ref"));

  mod.def(
      "sorted_m",
      [](const CostMatrix& m) {
        const SortedM s(m);
        std::vector<std::vector<std::pair<double, Vertex>>> out(m.n());
        for (Vertex v = 1; v <= static_cast<Vertex>(m.n()); ++v) {
          for (const SortedEntry& e : s.row(v)) out[static_cast<std::size_t>(v - 1)].emplace_back(e.cost, e.vertex);
        }
        return out;
      },
      py::arg("m"));
  mod.def(
      "first_column_check",
      [](const CostMatrix& m) {
        const FirstColumnResult r = first_column_check(SortedM(m));
        static const char* names[] = {"SingleCycle", "CoversButSubtours", "NotAPermutation"};
        std::optional<std::vector<Vertex>> c;
        if (r.cycle) c = from_cycle(*r.cycle);
        return py::make_tuple(c, names[static_cast<int>(r.status)]);
      },
      py::arg("m"));
  mod.def("row_minima_lower_bound", &row_minima_lower_bound, py::arg("m"));
  mod.def(
      "greedy_initial_cycle",
      [](const CostMatrix& m, Vertex start) { return from_cycle(greedy_initial_cycle(SortedM(m), start)); },
      py::arg("m"), py::arg("start"));

  mod.def(
      "reduction_report",
      [](const CostMatrix& m, const std::vector<Vertex>& cycle, double eps_start, std::optional<double> eps_floor,
         double step) {
        EstimateOptions opt;
        opt.eps_start = eps_start;
        opt.eps_floor = eps_floor;
        opt.step = step;
        return report_dict(reduction_report(estimate_alternatives(m, to_cycle(cycle), opt)));
      },
      py::arg("m"), py::arg("cycle"), py::arg("eps_start") = -0.9, py::arg("eps_floor") = 0.6, py::arg("step") = 0.01);
  mod.def("reducibility_degree",
          [](const std::vector<std::uint64_t>& a, std::size_t t, std::size_t n) { return reducibility_degree(a, t, n); },
          py::arg("a"), py::arg("tube_vertices"), py::arg("n"));

  mod.def(
      "brute_force_solve",
      [](const CostMatrix& m, unsigned threads, bool prune, std::size_t cap) {
        BruteForceOptions opt;
        opt.threads = threads;
        opt.prune = prune;
        opt.cap = cap;
        SolveResult r = [&] {
          py::gil_scoped_release release;
          return brute_force_solve(m, opt);
        }();
        return result_dict(r);
      },
      py::arg("m"), py::arg("threads") = 1, py::arg("prune") = false, py::arg("cap") = kDefaultBruteForceCap);
  mod.def(
      "frontier_solve",
      [](const CostMatrix& m, double eps_lo, double eps_hi, double eps_step, std::uint64_t max_cycles,
         const std::optional<std::vector<Vertex>>& seed) {
        const SolveConfig cfg = make_config(eps_lo, eps_hi, eps_step, max_cycles);
        std::optional<Cycle> s;
        if (seed) s = to_cycle(*seed);
        SolveResult r = [&] {
          py::gil_scoped_release release;
          return frontier_solve(m, cfg, s);
        }();
        return result_dict(r);
      },
      py::arg("m"), py::arg("eps_lo") = -0.9, py::arg("eps_hi") = 0.6, py::arg("eps_step") = 0.01,
      py::arg("max_cycles") = 50'000'000, py::arg("seed") = py::none());
  mod.def(
      "verify_optimal",
      [](const CostMatrix& m, const std::vector<Vertex>& cycle, double eps_lo, double eps_hi) {
        const VerifyResult v = verify_optimal(m, to_cycle(cycle), make_config(eps_lo, eps_hi, 0.01, 50'000'000));
        py::dict d;
        d["status"] = std::string(to_string(v.status));
        d["improved"] = v.improved ? py::object(py::cast(from_cycle(*v.improved))) : py::object(py::none());
        d["details"] = result_dict(v.details);
        return d;
      },
      py::arg("m"), py::arg("cycle"), py::arg("eps_lo") = -0.9, py::arg("eps_hi") = 0.6);
  mod.def(
      "landscape_csv",
      [](const CostMatrix& m, const std::vector<Vertex>& ref) { return export_landscape_csv(landscape(m, to_cycle(ref))); },
      py::arg("m"), py::arg("ref"));

  mod.def(
      "export_lp", [](const CostMatrix& m) { return export_lp(build_model(m)); }, py::arg("m"));
  mod.def(
      "cycle_to_point",
      [](const std::vector<Vertex>& c) {
        const AssignmentPoint p = cycle_to_point(to_cycle(c));
        return std::vector<int>(p.values().begin(), p.values().end());
      },
      py::arg("cycle"));
  mod.def(
      "point_to_cycle",
      [](std::size_t n, const std::vector<int>& x) {
        std::vector<std::uint8_t> v;
        for (int b : x) {
          if (b != 0 && b != 1) throw Error(ErrorCode::InvalidArgument, "entries must be 0 or 1");
          v.push_back(static_cast<std::uint8_t>(b));
        }
        return from_cycle(require_cycle(AssignmentPoint::create(n, std::move(v))));
      },
      py::arg("n"), py::arg("x"));
  mod.def(
      "feasible_point_count", [](std::size_t n) { return enumerate_feasible_points(n).size(); }, py::arg("n"));

  mod.def("render", &render, py::arg("m"), py::arg("what") = "matrix", py::arg("cycle") = py::none(),
          py::arg("candidate") = py::none());
}
