#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "fixtures.hpp"
#include "factorspec/error.hpp"
#include "factorspec/extremal.hpp"
#include "factorspec/harness.hpp"
#include "factorspec/oracle.hpp"

using namespace factorspec;

TEST_CASE("graph6 stream") {
  std::istringstream two("Bw\nA_\n");
  Graph6Reader reader(two);
  auto first = reader.next();
  REQUIRE(first.has_value());
  CHECK(first->graph == complete(3));
  CHECK(first->line == 1);
  auto second = reader.next();
  REQUIRE(second.has_value());
  CHECK(second->graph == complete(2));
  CHECK(second->line == 2);
  CHECK_FALSE(reader.next().has_value());

  std::istringstream empty("");
  CHECK(read_catalog(empty).empty());

  std::istringstream headed(">>graph6<<Bw\r\n\n>>graph6<<A?\n");
  const auto graphs = read_catalog(headed);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == empty_graph(2));
}

TEST_CASE("malformed records") {
  std::istringstream bad("Bw\nZZZ\nA_\n");
  Graph6Reader strict(bad);
  CHECK(strict.next().has_value());
  try {
    (void)strict.next();
    FAIL("expected FormatError");
  } catch (const FormatError &e) {
    CHECK(e.line() == 2u);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream bad2("Bw\nZZZ\nA_\nB\n");
  Graph6Reader lenient(bad2, true);
  std::size_t count = 0;
  while (lenient.next())
    ++count;
  CHECK(count == 2);
  CHECK(lenient.skipped() == 2);
  CHECK(lenient.lines_read() == 4);

  CHECK_THROWS_AS(read_catalog_file("/nonexistent/catalog.g6"), InputError);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto &h : hits)
    CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(100, 3,
                               [](std::size_t i) {
                                 if (i == 57)
                                   throw InputError("boom");
                               }),
                  InputError);
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("worker count from the environment") {
  setenv("FACTORSPEC_WORKERS", "3", 1);
  CHECK(default_worker_count() == 3);
  setenv("FACTORSPEC_WORKERS", "zero", 1);
  CHECK(default_worker_count() >= 1);
  unsetenv("FACTORSPEC_WORKERS");
  CHECK(default_worker_count() >= 1);
}

TEST_CASE("mining a single H_{n,b}") {
  const std::vector<Graph> one{build_hnb(8, 3).graph};
  const auto r = mine_extremal(one, {1, 3}, FactorMode::integer);
  CHECK(r.graphs_examined == 1);
  CHECK(r.failing_count == 1);
  CHECK(r.hnb_is_argmax);
  REQUIRE(r.max_rho_failing.has_value());
  CHECK(std::abs(*r.max_rho_failing - rho_hnb(8, 3)) < 1e-8);
  CHECK(*r.argmax_graph == to_graph6(build_hnb(8, 3).graph));

  const std::vector<Graph> k8{complete(8)};
  const auto k = mine_extremal(k8, {1, 2}, FactorMode::integer);
  CHECK(k.failing_count == 0);
  CHECK_FALSE(k.argmax_graph.has_value());
  CHECK_FALSE(k.hnb_is_argmax);

  const std::vector<Graph> mixed{complete(4), complete(5)};
  CHECK_THROWS_AS(mine_extremal(mixed, {1, 2}, FactorMode::integer), InputError);
}

TEST_CASE("mining connected graphs of order 6") {
  const auto graphs = fixtures::load("connected6.g6");
  REQUIRE(graphs.size() == 112);
  const auto r = mine_extremal(graphs, {1, 2}, FactorMode::fractional);
  CHECK(r.graphs_examined == 112);
  CHECK(r.failing_count > 0);
  REQUIRE(r.max_rho_failing.has_value());
  CHECK(*r.max_rho_failing >= rho_hnb(6, 2) - 1e-8);
  CHECK(r.rho_hnb_reference == doctest::Approx(rho_hnb(6, 2)));

  // H_{6,2} is in the catalog (up to isomorphism) and fails
  const auto h = build_hnb(6, 2).graph;
  CHECK_FALSE(has_all_fractional_ab_factors(h, {1, 2}).verdict);
  bool found = false;
  for (const auto &g : graphs)
    if (g.degree_sequence().size() == 6 && g.size() == h.size()) {
      auto ds = g.degree_sequence();
      auto hs = h.degree_sequence();
      std::sort(ds.begin(), ds.end());
      std::sort(hs.begin(), hs.end());
      found = found || (ds == hs && std::abs(spectral_radius(g).rho - rho_hnb(6, 2)) < 1e-8);
    }
  CHECK(found);

  // the argmax reproduces
  const auto arg = parse_graph6(*r.argmax_graph);
  CHECK_FALSE(has_all_fractional_ab_factors(arg, {1, 2}).verdict);
  CHECK(std::abs(spectral_radius(arg).rho - *r.max_rho_failing) < 1e-8);
}

TEST_CASE("mining is independent of worker count and chunking") {
  const auto graphs = fixtures::load("connected7.g6");
  MineOptions serial;
  serial.workers = 1;
  MineOptions parallel;
  parallel.workers = 4;
  parallel.chunk_size = 13;
  for (auto mode : {FactorMode::integer, FactorMode::fractional}) {
    const auto a = mine_extremal(graphs, {1, 3}, mode, serial);
    const auto b = mine_extremal(graphs, {1, 3}, mode, parallel);
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
  std::ifstream in(fixtures::catalog_path("connected7.g6"));
  Graph6Reader reader(in);
  const auto streamed = mine_extremal(reader, {1, 3}, FactorMode::integer, parallel);
  CHECK(to_json(streamed).dump() ==
        to_json(mine_extremal(graphs, {1, 3}, FactorMode::integer, serial)).dump());
}

TEST_CASE("equivalence suites") {
  const auto graphs = fixtures::load("connected_upto8.g6");
  SuiteOptions integer;
  integer.n_max = 6;
  integer.grid = {{1, 2}};
  const auto r = equivalence_suite(graphs, integer);
  CHECK(r.passed());
  CHECK(r.graphs_run == 1 + 1 + 2 + 6 + 21 + 112);
  CHECK(r.cases_run == r.graphs_run);
  CHECK(r.graphs_skipped == graphs.size() - r.graphs_run);

  SuiteOptions fractional;
  fractional.n_max = 6;
  fractional.grid = {{1, 2}, {2, 3}};
  fractional.mode = SuiteMode::fractional;
  fractional.workers = 3;
  const auto f = equivalence_suite(graphs, fractional);
  CHECK(f.passed());
  CHECK(f.cases_run == 2 * f.graphs_run);
  CHECK(f.suite == "fractional-equivalence");
}

TEST_CASE("a corrupted decider is caught") {
  const auto graphs = fixtures::load("connected_upto8.g6");
  SuiteOptions options;
  options.n_max = 5;
  options.decider_override = [](const Graph &g, DegreeBounds) { return g.size() % 2 == 0; };
  const auto r = equivalence_suite(graphs, options);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.mismatches.empty());
  for (const auto &m : r.mismatches) {
    const auto g = parse_graph6(m.graph6);
    CHECK(m.decider == (g.size() % 2 == 0));
    CHECK(m.oracle == all_ab_factors_oracle(g, m.bounds).holds);
    CHECK(m.decider != m.oracle);
  }
  const auto j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["mismatches"].size() == r.mismatches.size());
}

TEST_CASE("suite reports are deterministic") {
  const auto graphs = fixtures::load("connected_upto8.g6");
  SuiteOptions a;
  a.n_max = 6;
  a.workers = 1;
  a.decider_override = [](const Graph &g, DegreeBounds) { return g.size() % 3 == 0; };
  SuiteOptions b = a;
  b.workers = 5;
  CHECK(to_json(equivalence_suite(graphs, a)).dump() ==
        to_json(equivalence_suite(graphs, b)).dump());
}

TEST_CASE("report serialization") {
  CHECK(round_report_real(1.0 / 3.0) == 0.333333333333);
  CHECK(round_report_real(8.05636863849734) == 8.05636863850);
  MineReport m;
  m.elapsed = 1.5;
  CHECK_FALSE(to_json(m).contains("elapsed"));
  CHECK(to_json(m, true)["elapsed"] == 1.5);
  CHECK(to_json(m)["schema"] == 1);
  CHECK(to_json(m)["argmax_graph"].is_null());

  const auto r = has_all_ab_factors(build_hnb(5, 3).graph, {1, 3});
  const auto j = to_json(r);
  CHECK(j["verdict"] == false);
  CHECK(j["min_value"] == r.min_value);
  CHECK(j["witness_S"].is_array());

  CHECK(parse_suite_mode("lu") == SuiteMode::lu_specialization);
  CHECK(to_string(SuiteMode::gf_specialization) == "gf");
  CHECK_THROWS_AS(parse_suite_mode("nope"), InputError);
}
