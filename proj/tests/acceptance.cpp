// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//
// usage: acceptance CATALOG_DIR

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "brute.hpp"
#include "factorspec/extremal.hpp"
#include "factorspec/graph.hpp"
#include "factorspec/harness.hpp"
#include "factorspec/oracle.hpp"
#include "factorspec/spectral.hpp"

using namespace factorspec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  double budget_seconds = 0.0; // 0 = no runtime target
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::string catalog_dir;

std::vector<Graph> catalog(const std::string &name) {
  return read_catalog_file(catalog_dir + "/" + name);
}

Outcome witness_values() {
  Outcome o;
  o.budget_seconds = 1.0;
  std::size_t cases = 0, bad = 0;
  for (std::size_t n = 4; n <= 40; ++n)
    for (int b = 3; static_cast<std::size_t>(b) < n; ++b) {
      ++cases;
      if (lemma24_witness(n, b, FactorMode::integer).min_value != -2)
        ++bad;
      if (static_cast<std::size_t>(b) + 2 <= n) {
        ++cases;
        if (lemma24_witness(n, b, FactorMode::fractional).min_value != -1)
          ++bad;
      }
    }
  o.pass = bad == 0;
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " witness evaluations exact (delta = -2, theta = -1)";
  return o;
}

Outcome g1_g2_comparison() {
  Outcome o;
  o.budget_seconds = 30.0;
  std::size_t cases = 0, bad = 0;
  for (int b = 1; b <= 5; ++b)
    for (int a = 1; a <= b; ++a) {
      ++cases;
      const auto n = g1g2_order(a, b);
      const auto c = g1g2_check(a, b, n);
      const auto k = c.c + 2 * b - 4;
      const double bound = static_cast<double>(n) - 2 - 1e-6;
      const bool ok = c.f_n_minus_2 > 0 && c.f_n_minus_3 == -2 * k * k &&
                      c.f_n_minus_3 < 0 && c.rho_g1 < bound && c.rho_g2 < bound;
      if (!ok) {
        ++bad;
        o.detail += "[a=" + std::to_string(a) + " b=" + std::to_string(b) + " fails] ";
      }
    }
  o.pass = bad == 0;
  o.detail += std::to_string(cases - bad) + "/" + std::to_string(cases) +
              " (a,b) pairs: f(n-2) > 0, f(n-3) = -2(c+2b-4)^2 < 0, rho(G1), rho(G2) < n-2";
  return o;
}

Outcome suite(SuiteMode mode, std::size_t n_max, double budget) {
  Outcome o;
  o.budget_seconds = budget;
  SuiteOptions options;
  options.mode = mode;
  options.n_max = n_max;
  const auto r = equivalence_suite(catalog("connected_upto8.g6"), options);
  o.pass = r.passed() && r.cases_run > 0;
  o.detail = std::to_string(r.cases_run) + " cases over " + std::to_string(r.graphs_run) +
             " connected graphs, " + std::to_string(r.mismatches.size()) + " mismatches";
  for (std::size_t i = 0; i < r.mismatches.size() && i < 5; ++i)
    o.detail += " [" + r.mismatches[i].graph6 + "]";
  return o;
}

Outcome hong() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  double worst = -1e300;
  for (const auto &g : catalog("connected_upto8.g6")) {
    ++cases;
    const double gap = spectral_radius(g).rho - hong_bound(g);
    worst = std::max(worst, gap);
    if (gap > 1e-9)
      ++bad;
  }
  o.pass = bad == 0 && cases == 12113;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " connected graphs n <= 8, max(rho - bound) = " + buf;
  return o;
}

Outcome quotient_transfer() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  double worst = 0.0;
  for (std::size_t n : {10, 100, 1000})
    for (std::size_t b : {2, 3, 5}) {
      ++cases;
      const auto h = build_hnb(n, b);
      const double q = leading_eigenvalue(quotient_matrix(h.graph, h.parts));
      const double dense = spectral_radius(h.graph).rho;
      worst = std::max(worst, std::abs(q - dense));
      const double nd = static_cast<double>(n);
      if (std::abs(q - dense) > 1e-8 || !(nd - 2 < q && q < nd - 1))
        ++bad;
    }
  o.pass = bad == 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " (n,b): |quotient - dense| max " + buf + ", n-2 < rho < n-1";
  return o;
}

Outcome k1_join() {
  Outcome o;
  o.budget_seconds = 30.0;
  std::size_t cases = 0, bad = 0;
  for (std::size_t n : {10, 20, 50, 100})
    for (std::size_t r = 2; r + 3 <= n; ++r) {
      ++cases;
      if (!(spectral_radius(build_k1_join(n, r).graph).rho < static_cast<double>(n) - 2 - 1e-6))
        ++bad;
    }
  o.pass = bad == 0;
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " (n,r) with rho(K_1 join (K_r u K_{n-1-r})) < n-2-1e-6";
  return o;
}

Outcome matching() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  auto check = [&](const Graph &g) {
    ++cases;
    const bool blossom = perfect_matching(g).has_value();
    const bool brute = 2 * brute::max_matching_size(g) == g.order();
    if (blossom != brute)
      ++bad;
  };
  const auto all = catalog("graphs_upto7.g6");
  for (const auto &g : all)
    check(g);
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::size_t> order(1, 10);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 10000; ++i)
    check(brute::random_graph(rng, order(rng), density(rng)));
  o.pass = bad == 0 && all.size() == 1252;
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) + " graphs (" +
             std::to_string(all.size()) + " catalog n <= 7 + 10000 random n <= 10)";
  return o;
}

Outcome graph6_format() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  std::mt19937_64 rng(20240902);
  std::uniform_int_distribution<std::size_t> order(0, 32);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    ++cases;
    const auto g = brute::random_graph(rng, order(rng), density(rng));
    if (!(parse_graph6(to_graph6(g)) == g))
      ++bad;
  }
  const bool goldens = parse_graph6("Bw") == complete(3) && to_graph6(complete(3)) == "Bw" &&
                       parse_graph6("A_") == complete(2) && to_graph6(complete(2)) == "A_" &&
                       parse_graph6("A?") == empty_graph(2) && to_graph6(empty_graph(2)) == "A?";
  o.pass = bad == 0 && goldens;
  o.detail = std::to_string(cases - bad) + "/" + std::to_string(cases) +
             " random round trips n <= 32; goldens Bw, A_, A? " + (goldens ? "ok" : "WRONG");
  return o;
}

Outcome thresholds() {
  Outcome o;
  const auto i = threshold_n(3, 4, FactorMode::integer);
  const auto f = threshold_n(1, 2, FactorMode::fractional);
  o.pass = i == 48 && f == 31;
  o.detail = "integer(3,4) = " + std::to_string(i) + ", fractional(1,2) = " + std::to_string(f);
  return o;
}

} // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance CATALOG_DIR\n");
    return 2;
  }
  catalog_dir = argv[1];

  const std::vector<Criterion> criteria{
      {1, "H_{n,b} witness values, 3 <= b < n <= 40", witness_values},
      {2, "G1/G2 polynomial signs and spectral radii, 1 <= a <= b <= 5", g1_g2_comparison},
      {3, "integer decider vs gadget oracle, connected n <= 7",
       [] { return suite(SuiteMode::integer, 7, 600.0); }},
      {4, "fractional decider vs per-p oracle, connected n <= 8",
       [] { return suite(SuiteMode::fractional, 8, 600.0); }},
      {5, "all-(g,f) decider with g=a, f=b vs [a,b] decider, connected n <= 6",
       [] { return suite(SuiteMode::gf_specialization, 6, 0.0); }},
      {6, "Hong bound on connected graphs n <= 8", hong},
      {7, "quotient vs dense spectral radius of H_{n,b}", quotient_transfer},
      {8, "K_1 join (K_r u K_{n-1-r}) below n-2", k1_join},
      {9, "blossom perfect matching vs brute force", matching},
      {10, "graph6 round trip and goldens", graph6_format},
      {11, "threshold formulas", thresholds},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.budget_seconds > 0 && seconds > o.budget_seconds) {
      o.pass = false;
      o.detail += " (over the runtime budget)";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s  %2d  %-66s %s  [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
