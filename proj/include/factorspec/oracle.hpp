#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "factorspec/conditions.hpp"
#include "factorspec/graph.hpp"

namespace factorspec {

/// Per-vertex degree prescription h.
struct DemandFunction {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t v) const { return values[v]; }
  std::int64_t total() const;

  friend bool operator==(const DemandFunction &, const DemandFunction &) = default;
};

/// Lexicographic stream over every h with a <= h(v) <= b (vertex 0 most
/// significant), optionally restricted to even totals. Restartable from a
/// cursor: the rank of the next candidate among all (b-a+1)^n functions.
class DemandEnumerator {
public:
  DemandEnumerator(std::size_t n, DegreeBounds bounds, bool even_total,
                   std::uint64_t cursor = 0);

  std::optional<DemandFunction> next();
  std::uint64_t cursor() const noexcept { return cursor_; }
  /// (b-a+1)^n, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> space_size() const noexcept { return space_; }

private:
  std::size_t n_;
  DegreeBounds bounds_;
  bool even_total_;
  std::uint64_t cursor_;
  std::optional<std::uint64_t> space_;
};

std::vector<DemandFunction> enumerate_admissible(std::size_t n,
                                                 DegreeBounds bounds,
                                                 bool even_total);

struct Matching {
  std::vector<Edge> edges;
  bool perfect = false;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm).
/// mate[v] == v means v is exposed.
std::vector<Vertex> maximum_matching(const Graph &g);

/// A perfect matching if one exists.
std::optional<Matching> perfect_matching(const Graph &g);

/// A node of the Tutte gadget: either the external node e(owner, neighbor)
/// or an internal node of `owner`.
struct GadgetNode {
  Vertex owner = 0;
  std::optional<Vertex> neighbor;
};

struct TutteGadget {
  Graph graph;
  std::vector<GadgetNode> nodes;
};

/// The gadget has a perfect matching iff g has an h-factor. Requires
/// h(v) <= d(v) for every v.
TutteGadget tutte_gadget(const Graph &g, const DemandFunction &h);

struct HFactorResult {
  bool exists = false;
  std::optional<Graph> factor;
};

HFactorResult has_h_factor(const Graph &g, const DemandFunction &h);

struct OracleLimits {
  std::uint64_t demand_budget = 1'000'000;
};

struct OracleResult {
  bool holds = true;
  std::optional<DemandFunction> counterexample;
  std::uint64_t demands_checked = 0;
};

/// Checks has_h_factor for every h in [a,b]^n with even total.
OracleResult all_ab_factors_oracle(const Graph &g, DegreeBounds bounds,
                                   OracleLimits limits = {});

/// Checks fractional p-factor existence for every p in [a,b]^n.
OracleResult all_fractional_oracle(const Graph &g, DegreeBounds bounds,
                                   OracleLimits limits = {});

} // namespace factorspec
