#include "gap/ipgap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gap/error.hpp"
#include "gap/instance_io.hpp"

namespace gap {

IpModel build_model(const CostMatrix& m) {
  const std::size_t n = m.n();
  IpModel model{n, std::vector<double>(n * n, 0.0), std::vector<std::uint8_t>(n * n, 0)};
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(n); ++j) {
      const std::size_t k = static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1);
      if (i == j || is_pos_inf(m(i, j))) {
        model.fixed_zero[k] = 1;
      } else {
        model.objective[k] = m(i, j);
      }
    }
  }
  return model;
}

bool is_feasible(std::size_t n, std::span<const std::uint8_t> x) {
  if (x.size() != n * n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i * n + j] > 1 || x[j * n + i] > 1) return false;
      row += x[i * n + j];
      col += x[j * n + i];
    }
    if (row != 1 || col != 1 || x[i * n + i] != 0) return false;
  }
  return true;
}

AssignmentPoint AssignmentPoint::create(std::size_t n, std::vector<std::uint8_t> x) {
  if (!is_feasible(n, x)) throw Error(ErrorCode::InvalidArgument, "not a feasible assignment point");
  return AssignmentPoint(n, std::move(x));
}

AssignmentPoint cycle_to_point(const Cycle& y) {
  const std::size_t n = y.n();
  std::vector<std::uint8_t> x(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(y[k] - 1) * n + static_cast<std::size_t>(y[k + 1] - 1)] = 1;
  }
  return AssignmentPoint::create(n, std::move(x));
}

std::variant<Cycle, Subtours> point_to_cycle(const AssignmentPoint& p) {
  const std::size_t n = p.n();
  std::vector<Vertex> succ(n);
  for (Vertex i = 1; i <= static_cast<Vertex>(n); ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(n); ++j) {
      if (p(i, j)) succ[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  std::vector<bool> seen(n, false);
  Subtours tours;
  for (Vertex start = 1; start <= static_cast<Vertex>(n); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::size_t len = 0;
    Vertex v = start;
    do {
      seen[static_cast<std::size_t>(v - 1)] = true;
      v = succ[static_cast<std::size_t>(v - 1)];
      ++len;
    } while (v != start);
    tours.lengths.push_back(len);
  }
  if (tours.lengths.size() == 1) return Cycle::from_successors(succ, 1);
  return tours;
}

Cycle require_cycle(const AssignmentPoint& p) {
  auto r = point_to_cycle(p);
  if (auto* c = std::get_if<Cycle>(&r)) return std::move(*c);
  std::string lengths;
  for (std::size_t len : std::get<Subtours>(r).lengths) {
    lengths += (lengths.empty() ? "" : ",") + std::to_string(len);
  }
  throw Error(ErrorCode::SubtourError, "assignment splits into subtours of lengths [" + lengths + "]");
}

double objective_value(const IpModel& model, const AssignmentPoint& p) {
  if (p.n() != model.n) throw Error(ErrorCode::SizeMismatch, "point and model differ in size");
  ExactAccumulator acc;
  for (Vertex i = 1; i <= static_cast<Vertex>(model.n); ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(model.n); ++j) {
      if (!p(i, j)) continue;
      // A point using a fixed variable is infeasible for this model.
      acc.add(model.is_fixed(i, j) ? kInfinity : model.coefficient(i, j));
    }
  }
  return acc.value();
}

namespace {

std::string var(std::size_t i, std::size_t j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

// Emits terms joined by " + ", wrapping so no line grows unreasonably long.
class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}

  void term(const std::string& text, bool negative) {
    if (count_ > 0) {
      if (count_ % kTermsPerLine == 0) out_ += "\n   ";
      out_ += negative ? " - " : " + ";
    } else if (negative) {
      out_ += "-";
    }
    out_ += text;
    ++count_;
  }

 private:
  static constexpr std::size_t kTermsPerLine = 8;
  std::string& out_;
  std::size_t count_ = 0;
};

}  // namespace

std::string export_lp(const IpModel& model) {
  const std::size_t n = model.n;
  std::string out;
  out += "\\ Assignment model, n = " + std::to_string(n) + "\n";
  out += "Minimize\n obj: ";
  {
    LineWriter w(out);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (model.is_fixed(static_cast<Vertex>(i), static_cast<Vertex>(j))) continue;
        const double c = model.coefficient(static_cast<Vertex>(i), static_cast<Vertex>(j));
        w.term(format_real(std::fabs(c)) + " " + var(i, j), std::signbit(c));
      }
    }
  }
  out += "\nSubject To\n";
  for (std::size_t i = 1; i <= n; ++i) {
    out += " r_" + std::to_string(i) + ": ";
    LineWriter w(out);
    for (std::size_t j = 1; j <= n; ++j) w.term(var(i, j), false);
    out += " = 1\n";
  }
  for (std::size_t j = 1; j <= n; ++j) {
    out += " s_" + std::to_string(j) + ": ";
    LineWriter w(out);
    for (std::size_t i = 1; i <= n; ++i) w.term(var(i, j), false);
    out += " = 1\n";
  }
  out += "Bounds\n";
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (model.is_fixed(static_cast<Vertex>(i), static_cast<Vertex>(j))) out += " " + var(i, j) + " = 0\n";
    }
  }
  out += "Binary\n";
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) out += " " + var(i, j) + "\n";
  }
  out += "End\n";
  return out;
}

std::vector<AssignmentPoint> enumerate_feasible_points(std::size_t n) {
  if (n < 2 || n > 8) throw Error(ErrorCode::CapExceeded, "feasible-point census supports 2 <= n <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<AssignmentPoint> out;
  do {
    bool derangement = true;
    for (std::size_t i = 0; i < n; ++i) derangement = derangement && perm[i] != i;
    if (!derangement) continue;
    std::vector<std::uint8_t> x(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i * n + perm[i]] = 1;
    out.push_back(AssignmentPoint::create(n, std::move(x)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace gap
