#include "gap/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "gap/error.hpp"

namespace gap {

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Next whitespace-delimited token on the current line; empty at end of line.
  std::string_view next_on_line() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // Advances past the end of the current line; false at end of input.
  bool next_line() {
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ": unexpected trailing token");
      }
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    ++pos_;
    ++line_;
    return true;
  }

  // Skips blank lines.
  void skip_blank() {
    for (;;) {
      std::size_t p = pos_;
      while (p < text_.size() && text_[p] != '\n' && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
      if (p < text_.size() && text_[p] == '\n') {
        pos_ = p + 1;
        ++line_;
        continue;
      }
      return;
    }
  }

  int line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

double parse_real(std::string_view tok, int line) {
  if (tok == "inf" || tok == "+inf") return kInfinity;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad number '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string format_real(double x) {
  if (is_pos_inf(x)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CostMatrix parse_instance(std::string_view text) {
  Tokenizer tok(text);
  tok.skip_blank();
  const std::string_view header = tok.next_on_line();
  const std::string_view count = tok.next_on_line();
  std::size_t n = 0;
  {
    const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
    if (count.empty() || ec != std::errc() || ptr != count.data() + count.size()) {
      throw Error(ErrorCode::ParseError, "header must be 'GAP n', 'TSP n' or 'POINTS n'");
    }
  }
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "n must be at least 2");
  if (n > 100000) throw Error(ErrorCode::ParseError, "n is unreasonably large");

  if (header == "POINTS") {
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!tok.next_line()) throw Error(ErrorCode::ParseError, "missing point line");
      pts[i].x = parse_real(tok.next_on_line(), tok.line());
      pts[i].y = parse_real(tok.next_on_line(), tok.line());
      if (is_pos_inf(pts[i].x) || is_pos_inf(pts[i].y)) {
        throw Error(ErrorCode::InvalidPoint, "line " + std::to_string(tok.line()) + ": infinite coordinate");
      }
    }
    tok.next_line();
    return CostMatrix::from_points(PointSet::create(std::move(pts)));
  }

  MatrixKind kind;
  if (header == "GAP") kind = MatrixKind::ArbitraryGap;
  else if (header == "TSP") kind = MatrixKind::SymmetricTsp;
  else throw Error(ErrorCode::ParseError, "unknown instance kind '" + std::string(header) + "'");

  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!tok.next_line()) throw Error(ErrorCode::ParseError, "missing matrix row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j) {
      const std::string_view t = tok.next_on_line();
      if (t.empty()) throw Error(ErrorCode::DimensionMismatch, "line " + std::to_string(tok.line()) + ": too few entries");
      const double c = parse_real(t, tok.line());
      if (i != j && is_pos_inf(c)) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(tok.line()) + ": 'inf' is only allowed on the diagonal");
      }
      entries[i * n + j] = c;
    }
  }
  tok.next_line();
  tok.skip_blank();
  if (!tok.next_on_line().empty()) throw Error(ErrorCode::ParseError, "trailing content after the matrix");
  return CostMatrix::create(n, std::move(entries), kind);
}

std::string format_instance(const CostMatrix& m) {
  std::string out;
  out += to_string(m.kind());
  out += ' ';
  out += std::to_string(m.n());
  out += '\n';
  if (m.kind() == MatrixKind::Euclidean2d && m.points()) {
    for (const Point2& p : m.points()->points()) out += format_real(p.x) + ' ' + format_real(p.y) + '\n';
    return out;
  }
  for (Vertex i = 1; i <= static_cast<Vertex>(m.n()); ++i) {
    for (Vertex j = 1; j <= static_cast<Vertex>(m.n()); ++j) {
      if (j > 1) out += ' ';
      out += format_real(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

CostMatrix read_instance(const std::filesystem::path& path) { return parse_instance(read_text_file(path)); }

void write_instance(const std::filesystem::path& path, const CostMatrix& m) {
  write_text_file(path, format_instance(m));
}

Cycle read_cycle(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return Cycle::parse(line);
  }
  throw Error(ErrorCode::ParseError, "no cycle in " + path.string());
}

}  // namespace gap
