#include "factorspec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <string>
#include <thread>

#include "factorspec/error.hpp"
#include "factorspec/oracle.hpp"

namespace factorspec {

// ---------------------------------------------------------------------------
// Catalog ingestion

Graph6Reader::Graph6Reader(std::istream &in, bool lenient)
    : in_(&in), lenient_(lenient) {}

std::optional<CatalogEntry> Graph6Reader::next() {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' '))
      text.pop_back();
    if (text.empty() || text == ">>graph6<<")
      continue;
    try {
      return CatalogEntry{parse_graph6(text), line_};
    } catch (const FormatError &e) {
      if (!lenient_)
        throw FormatError(e.what(), line_);
      ++skipped_;
    } catch (const InputError &e) {
      if (!lenient_)
        throw FormatError(e.what(), line_);
      ++skipped_;
    }
  }
  return std::nullopt;
}

std::vector<Graph> read_catalog(std::istream &in, bool lenient) {
  Graph6Reader reader(in, lenient);
  std::vector<Graph> out;
  while (auto e = reader.next())
    out.push_back(std::move(e->graph));
  return out;
}

std::vector<Graph> read_catalog_file(const std::string &path, bool lenient) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open catalog file '" + path + "'");
  return read_catalog(in, lenient);
}

// ---------------------------------------------------------------------------
// Worker pool

std::size_t default_worker_count() {
  if (const char *env = std::getenv("FACTORSPEC_WORKERS")) {
    char *end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0)
      return static_cast<std::size_t>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)> &fn) {
  if (workers == 0)
    workers = default_worker_count();
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= count)
        return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        cursor.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back(body);
  for (auto &t : threads)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

} // namespace

// ---------------------------------------------------------------------------
// Extremal mining

namespace {

struct MineCandidate {
  bool failing = false;
  double rho = 0.0;
  std::string graph6;
};

bool lacks_property(const Graph &g, DegreeBounds bounds, FactorMode mode,
                    const DeciderLimits &limits) {
  return mode == FactorMode::integer
             ? !has_all_ab_factors(g, bounds, limits).verdict
             : !has_all_fractional_ab_factors(g, bounds, limits).verdict;
}

class MineAccumulator {
public:
  MineAccumulator(DegreeBounds bounds, FactorMode mode, MineOptions options)
      : options_(options) {
    bounds.validate_strict();
    report_.bounds = bounds;
    report_.mode = mode;
    if (options_.workers == 0)
      options_.workers = default_worker_count();
  }

  void add_chunk(std::span<const Graph> chunk) {
    for (const auto &g : chunk) {
      if (report_.graphs_examined == 0)
        report_.n = g.order();
      if (g.order() != report_.n)
        throw InputError("mine: catalog mixes orders " +
                         std::to_string(report_.n) + " and " +
                         std::to_string(g.order()));
      ++report_.graphs_examined;
    }
    std::vector<MineCandidate> results(chunk.size());
    parallel_for(chunk.size(), options_.workers, [&](std::size_t i) {
      const auto &g = chunk[i];
      if (!lacks_property(g, report_.bounds, report_.mode, options_.limits))
        return;
      results[i] = {true, spectral_radius(g, options_.tol).rho, to_graph6(g)};
    });
    for (auto &c : results) {
      if (!c.failing)
        continue;
      ++report_.failing_count;
      if (!report_.max_rho_failing || c.rho > *report_.max_rho_failing ||
          (c.rho == *report_.max_rho_failing && c.graph6 < *report_.argmax_graph)) {
        report_.max_rho_failing = c.rho;
        report_.argmax_graph = std::move(c.graph6);
      }
    }
  }

  MineReport finish(double elapsed) {
    const auto n = report_.n;
    const auto b = static_cast<std::size_t>(report_.bounds.b);
    if (report_.graphs_examined > 0 && b >= 2 && b + 1 <= n) {
      report_.rho_hnb_reference = rho_hnb(n, b);
      if (report_.argmax_graph) {
        auto degrees = parse_graph6(*report_.argmax_graph).degree_sequence();
        auto expected = build_hnb(n, b).graph.degree_sequence();
        std::sort(degrees.begin(), degrees.end());
        std::sort(expected.begin(), expected.end());
        report_.hnb_is_argmax =
            degrees == expected &&
            std::abs(*report_.max_rho_failing - *report_.rho_hnb_reference) <= 1e-8;
      }
    }
    report_.elapsed = elapsed;
    return report_;
  }

private:
  MineOptions options_;
  MineReport report_;
};

} // namespace

MineReport mine_extremal(Graph6Reader &catalog, DegreeBounds bounds,
                         FactorMode mode, MineOptions options) {
  const auto start = std::chrono::steady_clock::now();
  MineAccumulator acc(bounds, mode, options);
  std::vector<Graph> chunk;
  const std::size_t chunk_size = std::max<std::size_t>(1, options.chunk_size);
  for (;;) {
    chunk.clear();
    while (chunk.size() < chunk_size) {
      auto e = catalog.next();
      if (!e)
        break;
      chunk.push_back(std::move(e->graph));
    }
    if (chunk.empty())
      break;
    acc.add_chunk(chunk);
  }
  return acc.finish(seconds_since(start));
}

MineReport mine_extremal(std::span<const Graph> catalog, DegreeBounds bounds,
                         FactorMode mode, MineOptions options) {
  const auto start = std::chrono::steady_clock::now();
  MineAccumulator acc(bounds, mode, options);
  const std::size_t chunk_size = std::max<std::size_t>(1, options.chunk_size);
  for (std::size_t i = 0; i < catalog.size(); i += chunk_size)
    acc.add_chunk(catalog.subspan(i, std::min(chunk_size, catalog.size() - i)));
  return acc.finish(seconds_since(start));
}

// ---------------------------------------------------------------------------
// Equivalence suites

std::string_view to_string(SuiteMode m) {
  switch (m) {
  case SuiteMode::integer:
    return "integer";
  case SuiteMode::fractional:
    return "fractional";
  case SuiteMode::gf_specialization:
    return "gf";
  case SuiteMode::lu_specialization:
    return "lu";
  }
  return "unknown";
}

SuiteMode parse_suite_mode(std::string_view text) {
  for (auto m : {SuiteMode::integer, SuiteMode::fractional,
                 SuiteMode::gf_specialization, SuiteMode::lu_specialization})
    if (text == to_string(m))
      return m;
  throw InputError("unknown suite mode '" + std::string(text) +
                   "' (expected integer, fractional, gf or lu)");
}

namespace {

std::pair<bool, bool> run_case(const Graph &g, DegreeBounds bounds,
                               const SuiteOptions &options) {
  const auto n = g.order();
  bool decider = false;
  bool reference = false;
  switch (options.mode) {
  case SuiteMode::integer:
    decider = has_all_ab_factors(g, bounds).verdict;
    reference = all_ab_factors_oracle(g, bounds).holds;
    break;
  case SuiteMode::fractional:
    decider = has_all_fractional_ab_factors(g, bounds).verdict;
    reference = all_fractional_oracle(g, bounds).holds;
    break;
  case SuiteMode::gf_specialization:
    decider = has_all_gf_factors(g, DegreeFunctions::constant(n, bounds.a, bounds.b))
                  .verdict;
    reference = has_all_ab_factors(g, bounds).verdict;
    break;
  case SuiteMode::lu_specialization:
    decider =
        lu_all_fractional_gf(g, DegreeFunctions::constant(n, bounds.a, bounds.b))
            .verdict;
    reference = has_all_fractional_ab_factors(g, bounds).verdict;
    break;
  }
  if (options.decider_override)
    decider = options.decider_override(g, bounds);
  return {decider, reference};
}

} // namespace

SuiteReport equivalence_suite(std::span<const Graph> catalog,
                              const SuiteOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto &b : options.grid)
    b.validate_strict();

  SuiteReport report;
  report.suite = std::string(to_string(options.mode)) + "-equivalence";
  std::vector<const Graph *> selected;
  for (const auto &g : catalog) {
    if (g.order() == 0 || g.order() > options.n_max || !is_connected(g)) {
      ++report.graphs_skipped;
      continue;
    }
    selected.push_back(&g);
  }

  std::vector<std::vector<Mismatch>> per_graph(selected.size());
  parallel_for(selected.size(), options.workers, [&](std::size_t i) {
    const Graph &g = *selected[i];
    for (const auto &bounds : options.grid) {
      const auto [decider, reference] = run_case(g, bounds, options);
      if (decider != reference)
        per_graph[i].push_back({to_graph6(g), bounds, decider, reference});
    }
  });
  for (auto &m : per_graph)
    for (auto &x : m)
      report.mismatches.push_back(std::move(x));
  report.graphs_run = selected.size();
  report.cases_run = selected.size() * options.grid.size();
  report.elapsed = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// JSON

double round_report_real(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::json set_json(const VertexSet &s) {
  nlohmann::json arr = nlohmann::json::array();
  for (Vertex v : s.members())
    arr.push_back(v);
  return arr;
}

template <typename T> nlohmann::json optional_json(const std::optional<T> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

nlohmann::json to_json(const ConditionReport &r) {
  nlohmann::json j;
  j["verdict"] = r.verdict;
  j["min_value"] = r.min_value;
  j["threshold"] = r.threshold;
  j["witness_S"] = set_json(r.witness_s);
  j["witness_T"] = r.witness_t ? set_json(*r.witness_t) : nlohmann::json(nullptr);
  j["pairs_examined"] = r.pairs_examined;
  return j;
}

nlohmann::json to_json(const MineReport &r, bool include_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["params"] = {{"a", r.bounds.a},
                 {"b", r.bounds.b},
                 {"n", r.n},
                 {"mode", std::string(to_string(r.mode))}};
  j["graphs_examined"] = r.graphs_examined;
  j["failing_count"] = r.failing_count;
  j["max_rho_failing"] = r.max_rho_failing
                             ? nlohmann::json(round_report_real(*r.max_rho_failing))
                             : nlohmann::json(nullptr);
  j["argmax_graph"] = optional_json(r.argmax_graph);
  j["rho_hnb_reference"] =
      r.rho_hnb_reference ? nlohmann::json(round_report_real(*r.rho_hnb_reference))
                          : nlohmann::json(nullptr);
  j["hnb_is_argmax"] = r.hnb_is_argmax;
  if (include_timing)
    j["elapsed"] = round_report_real(r.elapsed);
  return j;
}

nlohmann::json to_json(const SuiteReport &r, bool include_timing) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  j["cases_run"] = r.cases_run;
  j["graphs_run"] = r.graphs_run;
  j["graphs_skipped"] = r.graphs_skipped;
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto &m : r.mismatches)
    mismatches.push_back({{"graph6", m.graph6},
                          {"a", m.bounds.a},
                          {"b", m.bounds.b},
                          {"decider", m.decider},
                          {"oracle", m.oracle}});
  j["mismatches"] = std::move(mismatches);
  j["passed"] = r.passed();
  if (include_timing)
    j["elapsed"] = round_report_real(r.elapsed);
  return j;
}

} // namespace factorspec
