#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "factorspec/conditions.hpp"
#include "factorspec/extremal.hpp"
#include "factorspec/graph.hpp"
#include "factorspec/spectral.hpp"

namespace factorspec {

inline constexpr int kReportSchema = 1;

struct CatalogEntry {
  Graph graph;
  std::size_t line = 0;
};

/// Lazily decodes newline-delimited graph6 records. Blank lines are ignored
/// and a ">>graph6<<" header is accepted on any record. In strict mode a
/// malformed record raises FormatError carrying its line number; in lenient
/// mode it is skipped and counted.
class Graph6Reader {
public:
  explicit Graph6Reader(std::istream &in, bool lenient = false);

  std::optional<CatalogEntry> next();
  std::size_t skipped() const noexcept { return skipped_; }
  std::size_t lines_read() const noexcept { return line_; }

private:
  std::istream *in_;
  bool lenient_;
  std::size_t line_ = 0;
  std::size_t skipped_ = 0;
};

std::vector<Graph> read_catalog(std::istream &in, bool lenient = false);
/// Throws InputError when the file cannot be opened.
std::vector<Graph> read_catalog_file(const std::string &path,
                                     bool lenient = false);

/// FACTORSPEC_WORKERS if set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t default_worker_count();

/// Runs fn(i) for i in [0, count) on up to `workers` threads. The first
/// exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)> &fn);

struct MineOptions {
  DeciderLimits limits;
  double tol = kDefaultSpectralTol;
  /// 0 selects default_worker_count().
  std::size_t workers = 0;
  std::size_t chunk_size = 256;
};

struct MineReport {
  DegreeBounds bounds;
  std::size_t n = 0;
  FactorMode mode = FactorMode::integer;
  std::size_t graphs_examined = 0;
  std::size_t failing_count = 0;
  std::optional<double> max_rho_failing;
  std::optional<std::string> argmax_graph;
  std::optional<double> rho_hnb_reference;
  bool hnb_is_argmax = false;
  double elapsed = 0.0;
};

/// Among the catalog graphs lacking all (fractional) [a,b]-factors, finds
/// the one of largest spectral radius (ties go to the least graph6 string)
/// and compares it with H_{n,b}. All graphs must share one order.
MineReport mine_extremal(Graph6Reader &catalog, DegreeBounds bounds,
                         FactorMode mode, MineOptions options = {});
MineReport mine_extremal(std::span<const Graph> catalog, DegreeBounds bounds,
                         FactorMode mode, MineOptions options = {});

enum class SuiteMode {
  /// has_all_ab_factors vs. the gadget-matching oracle
  integer,
  /// has_all_fractional_ab_factors vs. the per-p fractional oracle
  fractional,
  /// has_all_gf_factors(g=a, f=b) vs. has_all_ab_factors
  gf_specialization,
  /// lu_all_fractional_gf(g=a, f=b) vs. has_all_fractional_ab_factors
  lu_specialization,
};

std::string_view to_string(SuiteMode m);
SuiteMode parse_suite_mode(std::string_view text);

struct Mismatch {
  std::string graph6;
  DegreeBounds bounds;
  bool decider = false;
  bool oracle = false;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::size_t graphs_run = 0;
  std::size_t graphs_skipped = 0;
  std::vector<Mismatch> mismatches;
  double elapsed = 0.0;

  bool passed() const noexcept { return mismatches.empty(); }
};

using AbDecider = std::function<bool(const Graph &, DegreeBounds)>;

struct SuiteOptions {
  std::size_t n_max = 7;
  std::vector<DegreeBounds> grid{{1, 2}, {1, 3}, {2, 3}};
  SuiteMode mode = SuiteMode::integer;
  std::size_t workers = 0;
  /// Replaces the decider side of the comparison (harness self-tests).
  AbDecider decider_override;
};

/// Runs decider and reference on every connected catalog graph of order at
/// most n_max, for every grid entry, and collects disagreements.
SuiteReport equivalence_suite(std::span<const Graph> catalog,
                              const SuiteOptions &options);

/// Rounds to 12 significant digits for report serialization.
double round_report_real(double x);

nlohmann::json to_json(const ConditionReport &r);
nlohmann::json to_json(const MineReport &r, bool include_timing = false);
nlohmann::json to_json(const SuiteReport &r, bool include_timing = false);

} // namespace factorspec
