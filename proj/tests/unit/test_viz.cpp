#include <doctest.h>

#include <algorithm>
#include <thread>

#include "../fixtures.hpp"
#include "gap/instance.hpp"
#include "gap/instance_io.hpp"
#include "gap/ipgap.hpp"
#include "gap/viz.hpp"

using namespace gap;
using fx::I;

namespace {

std::string golden(const std::string& name) { return read_text_file(std::string(GAP_GOLDEN_DIR) + "/" + name); }

std::size_t count(const ImageRgb& img, Rgb c) { return static_cast<std::size_t>(std::count(img.pixels.begin(), img.pixels.end(), c)); }

}  // namespace

TEST_CASE("render_cost_matrix") {
  const CostMatrix m = parse_instance(golden("matrix3.txt"));
  const ImageGray img = render_cost_matrix(m);
  CHECK(img.width == 3);
  CHECK(img.height == 3);
  CHECK(img.at(0, 1) == 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(img.at(i, i) == 255);
  CHECK(img.at(0, 2) == 128);
  CHECK(fx::code_of([] { render_cost_matrix(fx::gap_matrix({{I, 1}, {1, I}})); }) == ErrorCode::DegenerateRange);
}

TEST_CASE("render_sorted_m layering") {
  const CostMatrix m = parse_instance(golden("five.txt"));
  const SortedM s(m);
  const Cycle ref = Cycle::parse("5,4,3,2,1,5");
  const Frontier f = frontier_of(s, ref);
  const ImageRgb plain = render_sorted_m(s, f);
  CHECK(plain.width == 4);
  CHECK(plain.height == 5);
  CHECK(count(plain, kFrontierRed) == 5);
  CHECK(count(plain, kCandidateGreen) == 0);
  const ImageRgb same = render_sorted_m(s, f, ref);
  CHECK(count(same, kFrontierRed) == 0);
  CHECK(count(same, kCandidateGreen) == 5);
  const ImageRgb other = render_sorted_m(s, f, Cycle::parse("5,2,3,1,4,5"));
  CHECK(count(other, kCandidateGreen) == 5);
  CHECK(count(other, kFrontierRed) == 5);
  CHECK(plain.at(0, 0) == Rgb{28, 28, 28});
}

TEST_CASE("render_vertex_index") {
  const SortedM s(parse_instance(golden("five.txt")));
  const ImageGray img = render_vertex_index(s);
  CHECK(img.at(0, 1) == 255);
  CHECK(img.at(0, 0) == 153);

  std::vector<std::vector<double>> rows(255, std::vector<double>(255, 1.0));
  for (std::size_t i = 0; i < 255; ++i) rows[i][i] = I;
  const ImageGray big = render_vertex_index(SortedM(fx::gap_matrix(rows)));
  CHECK(big.at(1, 0) == 1);
  CHECK(big.at(0, 253) == 255);
}

TEST_CASE("netpbm headers") {
  const ImageGray g{2, 1, {7, 9}};
  CHECK(to_pgm(g) == std::string("P5\n2 1\n255\n\x07\x09", 13));
  const ImageRgb c{1, 1, {Rgb{1, 2, 3}}};
  CHECK(to_ppm(c) == std::string("P6\n1 1\n255\n\x01\x02\x03", 14));
}

TEST_CASE("goldens") {
  const CostMatrix m3 = parse_instance(golden("matrix3.txt"));
  const CostMatrix m5 = parse_instance(golden("five.txt"));
  const SortedM s5(m5);
  const auto render_all = [&] {
    return std::vector<std::string>{
        to_pgm(render_cost_matrix(m3)),
        to_ppm(render_sorted_m(s5, frontier_of(s5, Cycle::parse("5,4,3,2,1,5")), Cycle::parse("5,2,3,1,4,5"))),
        to_pgm(render_vertex_index(s5)), export_lp(build_model(parse_instance(golden("lp2.txt"))))};
  };
  const std::vector<std::string> expect{golden("matrix3.pgm"), golden("sorted5.ppm"), golden("vertex5.pgm"),
                                        golden("model2.lp")};
  CHECK(render_all() == expect);
  std::vector<std::vector<std::string>> outs(4);
  std::vector<std::thread> workers;
  for (std::size_t k = 0; k < outs.size(); ++k) workers.emplace_back([&, k] { outs[k] = render_all(); });
  for (auto& w : workers) w.join();
  for (const auto& o : outs) CHECK(o == expect);
}

TEST_CASE("landscape CSV") {
  const CostMatrix m = gen_random_gap(4, 6, -1, 1);
  const auto rows = landscape(m, Cycle::parse("4,3,2,1,4"));
  const std::string csv = export_landscape_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.rfind("rank,cost,shared_edges\n1,", 0) == 0);
  CHECK(csv == export_landscape_csv(rows));
  CHECK(parse_landscape_csv(csv) == rows);
  CHECK(fx::code_of([] { parse_landscape_csv("rank,cost\n"); }) == ErrorCode::ParseError);
  CHECK(fx::code_of([] { parse_landscape_csv("rank,cost,shared_edges\n1,x,2\n"); }) == ErrorCode::ParseError);
}
