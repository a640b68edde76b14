#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "fixtures.hpp"
#include "json.hpp"
#include "factorspec/cli.hpp"
#include "factorspec/extremal.hpp"

using namespace factorspec;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content) {
  const auto path = std::filesystem::temp_directory_path() / ("factorspec_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST_CASE("check reports the fractional failure of K_3") {
  const auto r = run({"check", "--g6", "Bw", "--a", "1", "--b", "2", "--mode", "fractional"});
  CHECK(r.code == kExitFails);
  CHECK(r.out.find("verdict:    false") != std::string::npos);
  CHECK(r.out.find("min value:  -1") != std::string::npos);

  const auto j = json::parse(
      run({"check", "--g6", "Bw", "--a", "1", "--b", "2", "--mode", "fractional", "--json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["report"]["verdict"] == false);
  CHECK(j["report"]["witness_S"].size() == 1);
  CHECK(j["report"]["min_value"] == -1);
}

TEST_CASE("check in integer and gf modes") {
  CHECK(run({"check", "--g6", "Bw", "--a", "1", "--b", "2"}).code == kExitHolds);
  const auto h = to_graph6(build_hnb(6, 3).graph);
  CHECK(run({"check", "--g6", h, "--a", "1", "--b", "3"}).code == kExitFails);

  const auto edges = temp_file("k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(run({"check", "--edges", edges, "--a", "1", "--b", "2"}).code == kExitHolds);
  CHECK(run({"check", "--edges", edges, "--a", "1", "--b", "2", "--mode", "gf"}).code ==
        kExitHolds);

  const auto g = temp_file("g.txt", "1 1 1 1\n");
  const auto f = temp_file("f.txt", "1 1 1 1\n");
  const auto gf = run({"check", "--edges", edges, "--mode", "gf", "--g", g, "--f", f, "--json"});
  CHECK(gf.code == kExitHolds);
  const auto j = json::parse(gf.out);
  CHECK(j["report"]["threshold"] == 0);
  CHECK(j["single_factor"]["verdict"] == true);

  const auto k3 = temp_file("k3.txt", "3  0 1 1 2 0 2");
  const auto three = temp_file("ones3.txt", "1 1 1");
  CHECK(run({"check", "--edges", k3, "--mode", "gf", "--g", three, "--f", three}).code ==
        kExitFails);
}

TEST_CASE("check rejects bad input with exit code 2") {
  CHECK(run({"check", "--g6", "Bw", "--a", "2", "--b", "2"}).code == kExitUsage);
  CHECK(run({"check", "--g6", "B", "--a", "1", "--b", "2"}).code == kExitUsage);
  CHECK(run({"check", "--a", "1", "--b", "2"}).code == kExitUsage);
  CHECK(run({"check", "--g6", "Bw", "--edges", "x", "--a", "1", "--b", "2"}).code ==
        kExitUsage);
  CHECK(run({"check", "--edges", "/nonexistent", "--a", "1", "--b", "2"}).code == kExitUsage);
  const auto odd = temp_file("odd.txt", "3 0 1 2");
  CHECK(run({"check", "--edges", odd, "--a", "1", "--b", "2"}).code == kExitUsage);
  const auto loop = temp_file("loop.txt", "3 1 1");
  const auto r = run({"check", "--edges", loop, "--a", "1", "--b", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("loop") != std::string::npos);
  CHECK(run({"check", "--g6", "Bw", "--a", "1", "--b", "2", "--mode", "lp"}).code ==
        kExitUsage);
  CHECK(run({"check", "--g6", to_graph6(complete(17)), "--a", "1", "--b", "2"}).code ==
        kExitUsage);
  CHECK(run({"check", "--g6", to_graph6(complete(17)), "--a", "1", "--b", "2", "--cap", "17"})
            .code == kExitHolds);
}

TEST_CASE("usage errors and help") {
  const auto unknown = run({"check", "--g6", "Bw", "--frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == kExitHolds);
  CHECK(help.out.find("construct") != std::string::npos);
  CHECK(run({"check", "--help"}).code == kExitHolds);
}

TEST_CASE("rho") {
  const auto j = json::parse(run({"rho", "--hnb", "48,4", "--json"}).out);
  CHECK(j["n_minus_2"] == 46);
  CHECK(j["exceeds"] == true);
  CHECK(j["rho"].get<double>() == doctest::Approx(rho_hnb(48, 4)).epsilon(1e-11));

  const auto k4 = json::parse(run({"rho", "--g6", to_graph6(complete(4)), "--json"}).out);
  CHECK(k4["rho"] == 3.0);
  CHECK(k4["exceeds"] == true);
  CHECK(k4["method"] == "dense-iteration");
  const auto c5 = json::parse(run({"rho", "--g6", to_graph6(cycle(5)), "--json"}).out);
  CHECK(c5["exceeds"] == false);
  // K_2 has rho 1 > 0; the edgeless triple has rho 0 < 1
  const auto k2 = json::parse(run({"rho", "--g6", "A_", "--json"}).out);
  CHECK(k2["exceeds"] == true);
  const auto e3 = json::parse(run({"rho", "--g6", "B?", "--json"}).out);
  CHECK(e3["exceeds"] == false);
  const auto p3 = json::parse(run({"rho", "--g6", to_graph6(path(3)), "--json"}).out);
  CHECK(p3["rho"].get<double>() == doctest::Approx(std::sqrt(2.0)));

  CHECK(run({"rho"}).code == kExitUsage);
  CHECK(run({"rho", "--hnb", "6"}).code == kExitUsage);
  CHECK(run({"rho", "--hnb", "6,6"}).code == kExitUsage);
}

TEST_CASE("construct") {
  const auto r = run({"construct", "hnb", "--n", "6", "--b", "3"});
  CHECK(r.code == kExitHolds);
  std::string code = r.out;
  code.erase(code.find_last_not_of('\n') + 1);
  CHECK(parse_graph6(code).degree_sequence() == std::vector<std::size_t>{2, 5, 5, 4, 4, 4});

  const auto g1 = run({"construct", "g1", "--a", "1", "--b", "2", "--n", "31", "--json"});
  CHECK(json::parse(g1.out)["part_sizes"] == json::array({2, 12, 17}));
  const auto g2 = run({"construct", "g2", "--b", "2", "--n", "31", "--json"});
  CHECK(json::parse(g2.out)["part_sizes"] == json::array({2, 8, 21}));
  CHECK(run({"construct", "k1join", "--n", "10", "--r", "3"}).code == kExitHolds);
  CHECK(run({"construct", "g2", "--b", "2", "--n", "10"}).code == kExitUsage);
  CHECK(run({"construct", "petersen", "--n", "10"}).code == kExitUsage);
  CHECK(run({"construct", "hnb"}).code == kExitUsage);
}

TEST_CASE("verify grids") {
  for (const auto &name : {"lemma23", "lemma24", "quotient", "k1join"}) {
    const auto r = run({"verify", name, "--json"});
    CHECK(r.code == kExitHolds);
    const auto j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["cases"].get<int>() > 0);
  }
  const auto hong =
      run({"verify", "hong", "--input", fixtures::catalog_path("connected_upto8.g6")});
  CHECK(hong.code == kExitHolds);
  CHECK(hong.out.find("12113/12113") != std::string::npos);
  CHECK(run({"verify", "hong"}).code == kExitUsage);
  CHECK(run({"verify", "everything"}).code == kExitUsage);
  CHECK(run({"verify", "quotient", "--n", "12", "--b", "4"}).code == kExitHolds);
}

TEST_CASE("mine and suite") {
  const auto path6 = fixtures::catalog_path("connected6.g6");
  const auto mine = run({"mine", "--input", path6, "--a", "1", "--b", "2", "--mode",
                         "fractional", "--json"});
  CHECK(mine.code == kExitFails);
  const auto j = json::parse(mine.out);
  CHECK(j["graphs_examined"] == 112);
  CHECK_FALSE(j.contains("elapsed"));
  const auto timed = run({"mine", "--input", path6, "--a", "1", "--b", "2", "--json",
                          "--timing"});
  CHECK(json::parse(timed.out).contains("elapsed"));

  setenv("FACTORSPEC_WORKERS", "1", 1);
  const auto one = run({"mine", "--input", path6, "--a", "1", "--b", "3", "--json"});
  setenv("FACTORSPEC_WORKERS", "4", 1);
  const auto four = run({"mine", "--input", path6, "--a", "1", "--b", "3", "--json"});
  unsetenv("FACTORSPEC_WORKERS");
  CHECK(one.out == four.out);

  const auto bad = temp_file("bad.g6", "Bw\nZZZ\n");
  const auto strict = run({"mine", "--input", bad, "--a", "1", "--b", "2"});
  CHECK(strict.code == kExitUsage);
  CHECK(strict.err.find("line 2") != std::string::npos);
  const auto lenient = run({"mine", "--input", bad, "--a", "1", "--b", "2", "--lenient",
                            "--json"});
  CHECK(json::parse(lenient.out)["skipped_records"] == 1);

  const auto upto8 = fixtures::catalog_path("connected_upto8.g6");
  const auto suite = run({"suite", "--input", upto8, "--nmax", "5", "--json"});
  CHECK(suite.code == kExitHolds);
  CHECK(json::parse(suite.out)["passed"] == true);
  CHECK(run({"suite", "--input", upto8, "--nmax", "5", "--mode", "gf", "--grid", "1,2;2,4"})
            .code == kExitHolds);
  CHECK(run({"suite", "--input", upto8, "--grid", "1;2"}).code == kExitUsage);
  CHECK(run({"suite", "--input", "/nonexistent.g6"}).code == kExitUsage);
}
