#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "factorspec/graph.hpp"

namespace factorspec {

/// Constant degree bounds a <= b.
struct DegreeBounds {
  int a = 1;
  int b = 1;

  /// Throws InputError unless 1 <= a <= b.
  void validate() const;
  /// Throws InputError unless 1 <= a < b.
  void validate_strict() const;
};

/// Per-vertex lower and upper degree prescriptions g <= f.
struct DegreeFunctions {
  std::vector<int> g;
  std::vector<int> f;

  static DegreeFunctions constant(std::size_t n, int g, int f);
  static DegreeFunctions exact(std::vector<int> h);

  void validate(std::size_t n) const;
  /// g(v) == f(v) for every vertex.
  bool pointwise_equal() const { return g == f; }
};

/// Outcome of an exhaustive check of a deficiency functional.
///
/// `min_value` is the global minimum over every examined choice of sets and
/// (witness_s, witness_t) is the least minimizer, comparing the set
/// bitmasks numerically (S first, then T). The functional must be at least
/// `threshold` everywhere for the verdict to be true. For the (g,f)
/// deciders witness_s holds D and witness_t holds S; for the single-set
/// conditions witness_t is the derived T.
struct ConditionReport {
  bool verdict = true;
  std::int64_t min_value = 0;
  std::int64_t threshold = 0;
  VertexSet witness_s;
  std::optional<VertexSet> witness_t;
  std::uint64_t pairs_examined = 0;
};

/// Exhaustive enumeration limits. `pair_cap` bounds n for the 3^n loops
/// over disjoint pairs, `subset_cap` for the 2^n loops over single sets.
struct DeciderLimits {
  std::size_t pair_cap = 16;
  std::size_t subset_cap = 22;
};

/// a|S| - b|T| + sum_{x in T} d_{G-S}(x) - q(S,T), q counting components of
/// G - (S u T).
std::int64_t delta(const Graph &g, DegreeBounds bounds, const VertexSet &s,
                   const VertexSet &t);

/// a|S| - b|T| + sum_{x in T} d_{G-S}(x) with T = {v not in S : d_{G-S}(v) < b}.
std::pair<std::int64_t, VertexSet> theta(const Graph &g, DegreeBounds bounds,
                                         const VertexSet &s);

struct ComponentCounts {
  /// Components with g = f throughout and e(C,S) + f(C) odd.
  std::size_t q_hat = 0;
  /// Components with some g < f, or with e(C,S) + f(C) odd.
  std::size_t q_star = 0;
};

ComponentCounts classify_components(const Graph &g, const VertexSet &d,
                                    const VertexSet &s,
                                    const DegreeFunctions &funcs);

/// f(D) - g(S) + sum_{x in S} d_{G-D}(x) - q_hat(D,S).
std::int64_t gf_factor_value(const Graph &g, const DegreeFunctions &funcs,
                             const VertexSet &d, const VertexSet &s);
/// g(D) - f(S) + sum_{x in S} d_{G-D}(x) - q_star(D,S).
std::int64_t all_gf_factors_value(const Graph &g, const DegreeFunctions &funcs,
                                  const VertexSet &d, const VertexSet &s);
/// f(S) - g(T) + sum_{v in T} d_{G-S}(v), T = {v not in S : d_{G-S}(v) < g(v)}.
std::pair<std::int64_t, VertexSet>
fractional_gf_value(const Graph &g, const DegreeFunctions &funcs,
                    const VertexSet &s);
/// g(S) - f(T) + sum_{x in T} d_{G-S}(x), T = {v not in S : d_{G-S}(v) < f(v)}.
std::pair<std::int64_t, VertexSet>
all_fractional_gf_value(const Graph &g, const DegreeFunctions &funcs,
                        const VertexSet &s);

/// Existence of a (g,f)-factor; threshold 0 over disjoint D, S.
ConditionReport has_gf_factor(const Graph &g, const DegreeFunctions &funcs,
                              DeciderLimits limits = {});
/// All (g,f)-factors; threshold 0 when g == f pointwise, -1 otherwise.
ConditionReport has_all_gf_factors(const Graph &g, const DegreeFunctions &funcs,
                                   DeciderLimits limits = {});
/// All [a,b]-factors (a < b): delta(S,T) >= -1 for all disjoint S, T.
ConditionReport has_all_ab_factors(const Graph &g, DegreeBounds bounds,
                                   DeciderLimits limits = {});
/// Existence of a fractional (g,f)-factor.
ConditionReport anstee_fractional_gf(const Graph &g, const DegreeFunctions &funcs,
                                     DeciderLimits limits = {});
/// All fractional (g,f)-factors.
ConditionReport lu_all_fractional_gf(const Graph &g, const DegreeFunctions &funcs,
                                     DeciderLimits limits = {});
/// All fractional [a,b]-factors (a < b): theta(S) >= 0 for every S.
ConditionReport has_all_fractional_ab_factors(const Graph &g, DegreeBounds bounds,
                                              DeciderLimits limits = {});

/// Repeated fractional p-factor feasibility checks on one graph. Caches
/// d_{G-S} for every S so each query costs O(2^n n).
class FractionalFactorTable {
public:
  explicit FractionalFactorTable(const Graph &g, DeciderLimits limits = {});

  /// Same verdict as anstee_fractional_gf(g, p, p).
  bool feasible(std::span<const int> p) const;
  std::size_t order() const noexcept { return n_; }

private:
  std::size_t n_;
  std::vector<std::uint8_t> degrees_; // [S * n + v]
};

} // namespace factorspec
