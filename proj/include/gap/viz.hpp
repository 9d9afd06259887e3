#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"
#include "gap/solver.hpp"
#include "gap/sorted_m.hpp"

namespace gap {

struct ImageGray {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;  ///< row-major

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct ImageRgb {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;

  const Rgb& at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
};

inline constexpr Rgb kFrontierRed{255, 0, 0};
inline constexpr Rgb kCandidateGreen{0, 255, 0};

/// n*n gray image of the scale-and-translate normalized matrix: cheapest
/// edge black, dearest white, diagonal white. Throws DegenerateRange.
ImageGray render_cost_matrix(const CostMatrix& m);

/// n rows by n-1 columns of sorted costs in gray, with the frontier's cells
/// red and, when given, the candidate's cells green on top.
ImageRgb render_sorted_m(const SortedM& s, const Frontier& frontier, const std::optional<Cycle>& candidate = std::nullopt);

/// n rows by n-1 columns; cell (v, c) is round(255 * vertex / n).
ImageGray render_vertex_index(const SortedM& s);

/// Binary "P5" / "P6" with maxval 255.
std::string to_pgm(const ImageGray& img);
std::string to_ppm(const ImageRgb& img);

/// "rank,cost,shared_edges" header then one row per rank.
std::string export_landscape_csv(std::span<const LandscapeRow> rows);
/// Throws ParseError.
std::vector<LandscapeRow> parse_landscape_csv(std::string_view text);

}  // namespace gap
