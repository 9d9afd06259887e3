#include <doctest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gap/cli.hpp"
#include "gap/instance_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "gapcli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gap::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "gapcycle_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(gap::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cli rank and unrank") {
  CHECK(run({"unrank", "--j", "1", "--n", "5"}).out == "5,4,3,2,1,5\n");
  CHECK(run({"unrank", "--j", "24", "--n", "5"}).out == "5,1,2,3,4,5\n");
  CHECK(run({"rank", "--cycle", "5,1,2,4,3,5"}).out == "23\n");
  CHECK(run({"unrank", "--j", "121645100408832000", "--n", "20"}).out ==
        "20,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20\n");
  const Outcome bad = run({"unrank", "--j", "25", "--n", "5"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("RankOutOfRange") != std::string::npos);
  CHECK(run({"unrank", "--j", "x", "--n", "5"}).code == 1);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"unrank", "--n", "5"}).code == 2);
  CHECK(run({"gen", "--kind", "lattice", "--n", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli unique-cost solve") {
  const fs::path inst = scratch("u3.txt");
  REQUIRE(run({"gen", "--kind", "unique-cost", "--n", "3", "-o", inst.string()}).code == 0);
  const Outcome r = run({"solve", inst.string(), "--method", "brute"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cycle"] == "3,1,2,3");
  CHECK(j["cost"] == 16.0);
  CHECK(j["rank"] == "2");
  CHECK(j["certificate"] == "ExactByBruteForce");
  const Outcome f = run({"solve", inst.string(), "--method", "frontier", "--eps-hi", "inf"});
  CHECK(nlohmann::json::parse(f.out)["cost"] == 16.0);
}

TEST_CASE("cli cap") {
  const fs::path inst = scratch("g12.txt");
  REQUIRE(run({"gen", "--kind", "random-gap", "--n", "12", "--seed", "3", "-o", inst.string()}).code == 0);
  const Outcome r = run({"solve", inst.string(), "--method", "brute"});
  CHECK(r.code == 1);
  CHECK(r.err.find("CapExceeded") != std::string::npos);
  CHECK(run({"solve", scratch("missing.txt").string()}).code == 1);
}

TEST_CASE("cli thread count does not change output") {
  const fs::path inst = scratch("e8.txt");
  REQUIRE(run({"gen", "--kind", "euclidean", "--n", "8", "--seed", "5", "-o", inst.string()}).code == 0);
  const Outcome one = run({"solve", inst.string(), "--method", "brute", "--threads", "1"});
  const Outcome four = run({"solve", inst.string(), "--method", "brute", "--threads", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("cli manifest determinism") {
  const fs::path inst = scratch("m.txt");
  const fs::path man1 = scratch("man1.json");
  const fs::path man2 = scratch("man2.json");
  REQUIRE(run({"gen", "--kind", "random-gap", "--n", "6", "--seed", "9", "--lo", "-1", "-o", inst.string(),
               "--manifest", man1.string()})
              .code == 0);
  const std::string first = gap::read_text_file(inst);
  REQUIRE(run({"gen", "--kind", "random-gap", "--n", "6", "--seed", "9", "--lo", "-1", "-o", inst.string(),
               "--manifest", man2.string()})
              .code == 0);
  CHECK(gap::read_text_file(inst) == first);
  const auto m1 = nlohmann::json::parse(gap::read_text_file(man1));
  const auto m2 = nlohmann::json::parse(gap::read_text_file(man2));
  CHECK(m1["output_digests"] == m2["output_digests"]);
  CHECK(m1["command"] == "gen");
  CHECK(m1["seed"] == 9);
  CHECK(m1["flags"]["--kind"] == "random-gap");
  CHECK(m1["output_digests"][inst.string()] == gap::sha256_hex(first));

  const fs::path sman = scratch("solve.json");
  const Outcome s1 = run({"solve", inst.string(), "--manifest", sman.string()});
  const auto sm = nlohmann::json::parse(gap::read_text_file(sman));
  CHECK(sm["input_digest"] == gap::sha256_hex(first));
  CHECK(sm["output_digests"]["stdout"] == gap::sha256_hex(s1.out));
  CHECK(run({"solve", inst.string()}).out == s1.out);
}

TEST_CASE("cli remaining subcommands") {
  const fs::path inst = scratch("five.txt");
  gap::write_text_file(inst, "GAP 5\ninf 4 1 3 2\n7 inf 5 6 9\n2 8 inf 2 1\n3 3 3 inf 0\n6 1 4 5 inf\n");

  const Outcome s = run({"sortedm", inst.string()});
  CHECK(s.out.substr(0, s.out.find('\n')) == "1:3 2:5 3:4 4:2");

  const Outcome red = run({"reduce", inst.string(), "--cycle", "5,4,3,2,1,5"});
  REQUIRE(red.code == 0);
  const auto rj = nlohmann::json::parse(red.out);
  for (const char* key : {"A", "p", "a", "eps", "T", "tubes"}) CHECK(rj.contains(key));
  CHECK(rj["A"].is_string());

  const fs::path cyc = scratch("claim.txt");
  gap::write_text_file(cyc, "# claimed\n5,4,3,2,1,5\n");
  const Outcome v = run({"verify", inst.string(), "--cycle", cyc.string()});
  REQUIRE(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["status"] == "Improved");
  CHECK(run({"verify", inst.string()}).code == 2);

  const Outcome land = run({"landscape", inst.string()});
  CHECK(land.out.rfind("rank,cost,shared_edges\n1,", 0) == 0);
  CHECK(std::count(land.out.begin(), land.out.end(), '\n') == 25);

  const fs::path lp = scratch("five.lp");
  CHECK(run({"export-lp", inst.string(), "-o", lp.string()}).code == 0);
  CHECK(gap::read_text_file(lp).rfind("\\ Assignment model, n = 5\n", 0) == 0);

  const fs::path img = scratch("five.ppm");
  CHECK(run({"render", inst.string(), "--what", "sorted", "-o", img.string()}).code == 0);
  CHECK(gap::read_text_file(img).rfind("P6\n4 5\n255\n", 0) == 0);
  CHECK(run({"render", inst.string(), "--what", "matrix", "-o", img.string()}).code == 0);
  CHECK(gap::read_text_file(img).rfind("P5\n5 5\n255\n", 0) == 0);
  CHECK(run({"render", inst.string()}).code == 2);
}
