#include "gap/viz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gap/error.hpp"
#include "gap/instance.hpp"
#include "gap/instance_io.hpp"

namespace gap {

namespace {

std::uint8_t to_gray(double unit) {
  return static_cast<std::uint8_t>(std::lround(255.0 * std::clamp(unit, 0.0, 1.0)));
}

}  // namespace

ImageGray render_cost_matrix(const CostMatrix& m) {
  const RealMatrix norm = normalize_scale_translate(m);
  ImageGray img{m.n(), m.n(), std::vector<std::uint8_t>(m.n() * m.n())};
  for (std::size_t k = 0; k < norm.values.size(); ++k) img.pixels[k] = to_gray(norm.values[k]);
  return img;
}

ImageRgb render_sorted_m(const SortedM& s, const Frontier& frontier, const std::optional<Cycle>& candidate) {
  const std::size_t n = s.n();
  const std::size_t w = s.width();
  if (frontier.positions.size() != n) throw Error(ErrorCode::SizeMismatch, "frontier built on a different SortedM");

  double lo = kInfinity;
  double hi = -kInfinity;
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    for (const SortedEntry& e : s.row(v)) {
      if (is_pos_inf(e.cost)) continue;
      lo = std::min(lo, e.cost);
      hi = std::max(hi, e.cost);
    }
  }
  ImageRgb img{w, n, std::vector<Rgb>(n * w)};
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    for (std::size_t c = 0; c < w; ++c) {
      const double cost = s.at(v, c).cost;
      std::uint8_t g = 255;
      if (!is_pos_inf(cost)) g = hi > lo ? to_gray((cost - lo) / (hi - lo)) : 0;
      img.pixels[static_cast<std::size_t>(v - 1) * w + c] = Rgb{g, g, g};
    }
  }
  for (std::size_t i = 0; i < n; ++i) img.pixels[i * w + frontier.positions[i]] = kFrontierRed;
  if (candidate) {
    candidate->require_size(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vertex v = (*candidate)[k];
      img.pixels[static_cast<std::size_t>(v - 1) * w + s.column_of(v, (*candidate)[k + 1])] = kCandidateGreen;
    }
  }
  return img;
}

ImageGray render_vertex_index(const SortedM& s) {
  const std::size_t n = s.n();
  const std::size_t w = s.width();
  ImageGray img{w, n, std::vector<std::uint8_t>(n * w)};
  for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
    for (std::size_t c = 0; c < w; ++c) {
      // round(255 * vertex / n) in integers, halves rounding up.
      const auto vertex = static_cast<std::uint64_t>(s.at(v, c).vertex);
      img.pixels[static_cast<std::size_t>(v - 1) * w + c] = static_cast<std::uint8_t>((510 * vertex + n) / (2 * n));
    }
  }
  return img;
}

std::string to_pgm(const ImageGray& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(img.pixels.begin(), img.pixels.end());
  return out;
}

std::string to_ppm(const ImageRgb& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.reserve(out.size() + img.pixels.size() * 3);
  for (const Rgb& p : img.pixels) {
    out.push_back(static_cast<char>(p.r));
    out.push_back(static_cast<char>(p.g));
    out.push_back(static_cast<char>(p.b));
  }
  return out;
}

std::string export_landscape_csv(std::span<const LandscapeRow> rows) {
  std::string out = "rank,cost,shared_edges\n";
  for (const LandscapeRow& r : rows) {
    out += std::to_string(r.rank);
    out += ',';
    out += format_real(r.cost);
    out += ',';
    out += std::to_string(r.shared_edges);
    out += '\n';
  }
  return out;
}

std::vector<LandscapeRow> parse_landscape_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "rank,cost,shared_edges") {
    throw Error(ErrorCode::ParseError, "missing landscape CSV header");
  }
  std::vector<LandscapeRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) throw Error(ErrorCode::ParseError, "bad landscape row '" + line + "'");
    LandscapeRow r;
    const char* b = line.data();
    const auto e1 = std::from_chars(b, b + c1, r.rank);
    const auto e2 = std::from_chars(b + c1 + 1, b + c2, r.cost);
    const auto e3 = std::from_chars(b + c2 + 1, b + line.size(), r.shared_edges);
    if (e1.ec != std::errc() || e2.ec != std::errc() || e3.ec != std::errc() || e3.ptr != b + line.size()) {
      throw Error(ErrorCode::ParseError, "bad landscape row '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace gap
