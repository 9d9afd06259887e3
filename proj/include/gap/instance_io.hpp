#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gap/cost_matrix.hpp"
#include "gap/cycle.hpp"

namespace gap {

// Instance text format:
//
//   GAP n | TSP n | POINTS n
//   n lines of n entries ("inf" on the diagonal and nowhere else)  -- GAP/TSP
//   n lines "x y"                                                  -- POINTS
//
// Numbers are written with 17 significant digits so a write/read round trip
// is exact.

CostMatrix parse_instance(std::string_view text);
std::string format_instance(const CostMatrix& m);

CostMatrix read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const CostMatrix& m);

/// A cycle file holds one comma-separated cycle (blank lines and lines
/// starting with '#' are ignored).
Cycle read_cycle(const std::filesystem::path& path);

/// "%.17g"; "inf" for +infinity.
std::string format_real(double x);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace gap
