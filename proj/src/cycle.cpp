#include "gap/cycle.hpp"

#include <charconv>
#include <string>

#include "gap/error.hpp"

namespace gap {

Cycle Cycle::from_vertices(std::vector<Vertex> vertices) {
  if (vertices.size() < 3) throw Error(ErrorCode::InvalidCycle, "a cycle needs at least 2 vertices plus the closing one");
  if (vertices.front() != vertices.back()) throw Error(ErrorCode::InvalidCycle, "first and last vertex differ");
  const std::size_t n = vertices.size() - 1;
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = vertices[k];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw Error(ErrorCode::InvalidCycle, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) throw Error(ErrorCode::InvalidCycle, "vertex " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Cycle(std::move(vertices));
}

Cycle Cycle::from_successors(std::span<const Vertex> succ, Vertex start) {
  const std::size_t n = succ.size();
  if (start < 1 || static_cast<std::size_t>(start) > n) throw Error(ErrorCode::InvalidCycle, "start vertex out of range");
  std::vector<Vertex> out;
  out.reserve(n + 1);
  Vertex v = start;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(v);
    v = succ[static_cast<std::size_t>(v - 1)];
    if (v < 1 || static_cast<std::size_t>(v) > n) throw Error(ErrorCode::InvalidCycle, "successor out of range");
  }
  if (v != start) throw Error(ErrorCode::InvalidCycle, "successor map is not a single cycle");
  out.push_back(start);
  return from_vertices(std::move(out));
}

Cycle Cycle::parse(std::string_view text) {
  std::vector<Vertex> vertices;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    Vertex v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad vertex token '" + std::string(token) + "'");
    }
    vertices.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_vertices(std::move(vertices));
}

std::vector<Vertex> Cycle::successors() const {
  std::vector<Vertex> succ(n());
  for (std::size_t k = 0; k < n(); ++k) succ[static_cast<std::size_t>(vertices_[k] - 1)] = vertices_[k + 1];
  return succ;
}

Cycle Cycle::rotated_to(Vertex start) const {
  const std::size_t len = n();
  std::size_t at = len;
  for (std::size_t k = 0; k < len; ++k) {
    if (vertices_[k] == start) {
      at = k;
      break;
    }
  }
  if (at == len) throw Error(ErrorCode::InvalidCycle, "vertex " + std::to_string(start) + " not on cycle");
  std::vector<Vertex> out;
  out.reserve(len + 1);
  for (std::size_t k = 0; k < len; ++k) out.push_back(vertices_[(at + k) % len]);
  out.push_back(start);
  return Cycle(std::move(out));
}

std::string Cycle::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(vertices_[k]);
  }
  return s;
}

void Cycle::require_size(std::size_t n) const {
  if (this->n() != n) {
    throw Error(ErrorCode::InvalidCycle,
                "cycle has " + std::to_string(this->n()) + " vertices, graph has " + std::to_string(n));
  }
}

}  // namespace gap
