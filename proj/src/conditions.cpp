#include "factorspec/conditions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "factorspec/error.hpp"

namespace factorspec {

void DegreeBounds::validate() const {
  if (a < 1 || a > b)
    throw InputError("degree bounds need 1 <= a <= b (got a=" +
                     std::to_string(a) + ", b=" + std::to_string(b) + ")");
}

void DegreeBounds::validate_strict() const {
  validate();
  if (a == b)
    throw InputError("all [a,b]-factor conditions need a < b (got a=b=" +
                     std::to_string(a) + ")");
}

DegreeFunctions DegreeFunctions::constant(std::size_t n, int g, int f) {
  return {std::vector<int>(n, g), std::vector<int>(n, f)};
}

DegreeFunctions DegreeFunctions::exact(std::vector<int> h) {
  return {h, h};
}

void DegreeFunctions::validate(std::size_t n) const {
  if (g.size() != n || f.size() != n)
    throw InputError("degree functions must have one value per vertex");
  for (std::size_t v = 0; v < n; ++v)
    if (g[v] < 0 || g[v] > f[v])
      throw InputError("degree functions need 0 <= g(v) <= f(v) at vertex " +
                       std::to_string(v));
}

namespace {

// ---------------------------------------------------------------------------
// Set-based evaluation, used for single queries and witness re-checks.

void require_universe(const Graph &g, const VertexSet &s) {
  if (s.universe() != g.order())
    throw InputError("vertex set universe does not match graph order");
}

std::int64_t sum_over(const VertexSet &s, const std::vector<int> &values) {
  std::int64_t total = 0;
  for (Vertex v : s.members())
    total += values[v];
  return total;
}

std::int64_t degree_sum(const Graph &g, const VertexSet &removed,
                        const VertexSet &over) {
  const auto d = degrees_excluding(g, removed);
  std::int64_t total = 0;
  for (Vertex v : over.members())
    total += static_cast<std::int64_t>(d[v].value());
  return total;
}

// ---------------------------------------------------------------------------
// Bitmask kernels for the exhaustive deciders (n <= 64).

struct MaskGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const Graph &g) : n(g.order()), adj(g.order()) {
    for (Vertex v = 0; v < n; ++v)
      adj[v] = g.row(v)[0];
  }

  std::uint64_t full() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  int degree_into(std::size_t v, std::uint64_t alive) const {
    return std::popcount(adj[v] & alive);
  }

  template <typename Fn> void for_each_component(std::uint64_t alive, Fn &&fn) const {
    while (alive != 0) {
      std::uint64_t comp = alive & (~alive + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (auto f = frontier; f != 0; f &= f - 1)
          next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      alive &= ~comp;
      fn(comp);
    }
  }

  int component_count(std::uint64_t alive) const {
    int q = 0;
    for_each_component(alive, [&](std::uint64_t) { ++q; });
    return q;
  }
};

void check_order(const Graph &g, std::size_t cap, const char *what) {
  if (g.order() == 0)
    throw InputError(std::string(what) + ": graph has no vertices");
  if (g.order() > cap || g.order() > 63)
    throw ResourceError(std::string(what) + ": order " +
                        std::to_string(g.order()) +
                        " exceeds the exhaustive enumeration cap of " +
                        std::to_string(std::min<std::size_t>(cap, 63)));
}

// Tracks the global minimum and the numerically least (first, second)
// minimizer.
struct MinTracker {
  std::int64_t value = 0;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  bool set = false;

  void offer(std::int64_t v, std::uint64_t a, std::uint64_t b) {
    if (!set || v < value ||
        (v == value && (a < first || (a == first && b < second)))) {
      value = v;
      first = a;
      second = b;
      set = true;
    }
  }
};

ConditionReport make_report(const MinTracker &m, std::int64_t threshold,
                            std::size_t n, bool with_second,
                            std::uint64_t examined) {
  ConditionReport r;
  r.min_value = m.value;
  r.threshold = threshold;
  r.verdict = m.value >= threshold;
  r.witness_s = VertexSet::from_mask(n, m.first);
  if (with_second)
    r.witness_t = VertexSet::from_mask(n, m.second);
  r.pairs_examined = examined;
  return r;
}

int popcount(std::uint64_t x) { return std::popcount(x); }

template <typename Fn> void for_bits(std::uint64_t mask, Fn &&fn) {
  for (; mask != 0; mask &= mask - 1)
    fn(static_cast<std::size_t>(std::countr_zero(mask)));
}

// Iterates over every ordered disjoint pair (X, Y); calls fn(X, Y, rest).
template <typename Fn> std::uint64_t for_each_disjoint_pair(std::uint64_t full, Fn &&fn) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0;; ++x) {
    if ((x & ~full) != 0)
      break;
    const std::uint64_t free = full & ~x;
    for (std::uint64_t y = free;; y = (y - 1) & free) {
      fn(x, y, free & ~y);
      ++count;
      if (y == 0)
        break;
    }
    if (x == full)
      break;
  }
  return count;
}

// Component classification shared by both (g,f) deciders.
struct GfKernel {
  const MaskGraph &mg;
  const DegreeFunctions &funcs;
  std::vector<std::uint8_t> slack; // g(v) < f(v)

  GfKernel(const MaskGraph &m, const DegreeFunctions &fs) : mg(m), funcs(fs) {
    for (std::size_t v = 0; v < mg.n; ++v)
      slack.push_back(fs.g[v] < fs.f[v] ? 1 : 0);
  }

  ComponentCounts classify(std::uint64_t s, std::uint64_t rest) const {
    ComponentCounts c;
    mg.for_each_component(rest, [&](std::uint64_t comp) {
      std::int64_t parity = 0;
      bool has_slack = false;
      for_bits(comp, [&](std::size_t v) {
        parity += funcs.f[v] + popcount(mg.adj[v] & s);
        has_slack = has_slack || slack[v] != 0;
      });
      const bool odd = (parity & 1) != 0;
      if (!has_slack && odd)
        ++c.q_hat;
      if (has_slack || odd)
        ++c.q_star;
    });
    return c;
  }

  // sum_{x in s} d_{G-d}(x)
  std::int64_t degree_sum(std::uint64_t d, std::uint64_t s) const {
    std::int64_t total = 0;
    for_bits(s, [&](std::size_t v) { total += popcount(mg.adj[v] & ~d); });
    return total;
  }

  std::int64_t sum(const std::vector<int> &values, std::uint64_t s) const {
    std::int64_t total = 0;
    for_bits(s, [&](std::size_t v) { total += values[v]; });
    return total;
  }
};

} // namespace

// ---------------------------------------------------------------------------
// Single evaluations

std::int64_t delta(const Graph &g, DegreeBounds bounds, const VertexSet &s,
                   const VertexSet &t) {
  require_universe(g, s);
  require_universe(g, t);
  if (s.intersects(t))
    throw InputError("delta: S and T overlap");
  const auto q = components_excluding(g, s | t).size();
  return std::int64_t{bounds.a} * static_cast<std::int64_t>(s.size()) -
         std::int64_t{bounds.b} * static_cast<std::int64_t>(t.size()) +
         degree_sum(g, s, t) - static_cast<std::int64_t>(q);
}

std::pair<std::int64_t, VertexSet> theta(const Graph &g, DegreeBounds bounds,
                                         const VertexSet &s) {
  require_universe(g, s);
  const auto d = degrees_excluding(g, s);
  VertexSet t(g.order());
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d[v] && static_cast<std::int64_t>(*d[v]) < bounds.b) {
      t.insert(v);
      sum += static_cast<std::int64_t>(*d[v]);
    }
  }
  const std::int64_t value =
      std::int64_t{bounds.a} * static_cast<std::int64_t>(s.size()) -
      std::int64_t{bounds.b} * static_cast<std::int64_t>(t.size()) + sum;
  return {value, t};
}

ComponentCounts classify_components(const Graph &g, const VertexSet &d,
                                    const VertexSet &s,
                                    const DegreeFunctions &funcs) {
  require_universe(g, d);
  require_universe(g, s);
  funcs.validate(g.order());
  if (d.intersects(s))
    throw InputError("classify_components: D and S overlap");
  ComponentCounts counts;
  for (const auto &comp : components_excluding(g, d | s)) {
    std::int64_t parity = static_cast<std::int64_t>(edges_between(g, comp, s));
    bool has_slack = false;
    for (Vertex v : comp.members()) {
      parity += funcs.f[v];
      has_slack = has_slack || funcs.g[v] < funcs.f[v];
    }
    const bool odd = parity % 2 != 0;
    if (!has_slack && odd)
      ++counts.q_hat;
    if (has_slack || odd)
      ++counts.q_star;
  }
  return counts;
}

std::int64_t gf_factor_value(const Graph &g, const DegreeFunctions &funcs,
                             const VertexSet &d, const VertexSet &s) {
  const auto c = classify_components(g, d, s, funcs);
  return sum_over(d, funcs.f) - sum_over(s, funcs.g) + degree_sum(g, d, s) -
         static_cast<std::int64_t>(c.q_hat);
}

std::int64_t all_gf_factors_value(const Graph &g, const DegreeFunctions &funcs,
                                  const VertexSet &d, const VertexSet &s) {
  const auto c = classify_components(g, d, s, funcs);
  return sum_over(d, funcs.g) - sum_over(s, funcs.f) + degree_sum(g, d, s) -
         static_cast<std::int64_t>(c.q_star);
}

namespace {

// value = upper(S) - lower(T) + sum_T d_{G-S}, T = {v not in S : d < lower}.
std::pair<std::int64_t, VertexSet>
single_set_value(const Graph &g, const std::vector<int> &on_s,
                 const std::vector<int> &on_t, const VertexSet &s) {
  require_universe(g, s);
  const auto d = degrees_excluding(g, s);
  VertexSet t(g.order());
  std::int64_t value = sum_over(s, on_s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (d[v] && static_cast<std::int64_t>(*d[v]) < on_t[v]) {
      t.insert(v);
      value += static_cast<std::int64_t>(*d[v]) - on_t[v];
    }
  }
  return {value, t};
}

} // namespace

std::pair<std::int64_t, VertexSet>
fractional_gf_value(const Graph &g, const DegreeFunctions &funcs,
                    const VertexSet &s) {
  funcs.validate(g.order());
  return single_set_value(g, funcs.f, funcs.g, s);
}

std::pair<std::int64_t, VertexSet>
all_fractional_gf_value(const Graph &g, const DegreeFunctions &funcs,
                        const VertexSet &s) {
  funcs.validate(g.order());
  return single_set_value(g, funcs.g, funcs.f, s);
}

// ---------------------------------------------------------------------------
// Deciders

ConditionReport has_all_ab_factors(const Graph &g, DegreeBounds bounds,
                                   DeciderLimits limits) {
  bounds.validate_strict();
  check_order(g, limits.pair_cap, "has_all_ab_factors");
  const MaskGraph mg(g);
  const std::uint64_t full = mg.full();
  const std::size_t n = mg.n;

  // q depends only on S u T; tabulate it once when the table is small.
  std::vector<std::uint8_t> qtable;
  if (n <= 22) {
    qtable.resize(std::size_t{1} << n);
    for (std::uint64_t removed = 0; removed <= full; ++removed)
      qtable[removed] = static_cast<std::uint8_t>(mg.component_count(full & ~removed));
  }

  std::vector<int> deg(n);
  std::uint64_t last_s = ~std::uint64_t{0};
  MinTracker best;
  const auto examined = for_each_disjoint_pair(
      full, [&](std::uint64_t s, std::uint64_t t, std::uint64_t rest) {
        if (s != last_s) {
          for (std::size_t v = 0; v < n; ++v)
            deg[v] = mg.degree_into(v, full & ~s);
          last_s = s;
        }
        std::int64_t value = std::int64_t{bounds.a} * popcount(s) -
                             std::int64_t{bounds.b} * popcount(t);
        for_bits(t, [&](std::size_t v) { value += deg[v]; });
        // q <= |rest|, so value - |rest| is a lower bound.
        if (best.set && value - popcount(rest) > best.value)
          return;
        value -= qtable.empty() ? mg.component_count(rest) : qtable[s | t];
        best.offer(value, s, t);
      });
  return make_report(best, -1, n, true, examined);
}

ConditionReport has_gf_factor(const Graph &g, const DegreeFunctions &funcs,
                              DeciderLimits limits) {
  funcs.validate(g.order());
  check_order(g, limits.pair_cap, "has_gf_factor");
  const MaskGraph mg(g);
  const GfKernel kernel(mg, funcs);
  MinTracker best;
  const auto examined = for_each_disjoint_pair(
      mg.full(), [&](std::uint64_t d, std::uint64_t s, std::uint64_t rest) {
        const auto value = kernel.sum(funcs.f, d) - kernel.sum(funcs.g, s) +
                           kernel.degree_sum(d, s) -
                           static_cast<std::int64_t>(kernel.classify(s, rest).q_hat);
        best.offer(value, d, s);
      });
  return make_report(best, 0, mg.n, true, examined);
}

ConditionReport has_all_gf_factors(const Graph &g, const DegreeFunctions &funcs,
                                   DeciderLimits limits) {
  funcs.validate(g.order());
  check_order(g, limits.pair_cap, "has_all_gf_factors");
  const MaskGraph mg(g);
  const GfKernel kernel(mg, funcs);
  MinTracker best;
  const auto examined = for_each_disjoint_pair(
      mg.full(), [&](std::uint64_t d, std::uint64_t s, std::uint64_t rest) {
        const auto value = kernel.sum(funcs.g, d) - kernel.sum(funcs.f, s) +
                           kernel.degree_sum(d, s) -
                           static_cast<std::int64_t>(kernel.classify(s, rest).q_star);
        best.offer(value, d, s);
      });
  return make_report(best, funcs.pointwise_equal() ? 0 : -1, mg.n, true, examined);
}

namespace {

// Minimizes on_s(S) - on_t(T) + sum_T d_{G-S} over all S, with
// T = {v not in S : d_{G-S}(v) < on_t(v)}.
ConditionReport single_set_decider(const Graph &g, const std::vector<int> &on_s,
                                   const std::vector<int> &on_t,
                                   DeciderLimits limits, const char *what) {
  check_order(g, limits.subset_cap, what);
  const MaskGraph mg(g);
  const std::uint64_t full = mg.full();
  MinTracker best;
  std::uint64_t examined = 0;
  for (std::uint64_t s = 0;; ++s) {
    std::int64_t value = 0;
    for_bits(s, [&](std::size_t v) { value += on_s[v]; });
    std::uint64_t t = 0;
    for_bits(full & ~s, [&](std::size_t v) {
      const int d = mg.degree_into(v, full & ~s);
      if (d < on_t[v]) {
        t |= std::uint64_t{1} << v;
        value += d - on_t[v];
      }
    });
    best.offer(value, s, t);
    ++examined;
    if (s == full)
      break;
  }
  return make_report(best, 0, mg.n, true, examined);
}

} // namespace

ConditionReport anstee_fractional_gf(const Graph &g, const DegreeFunctions &funcs,
                                     DeciderLimits limits) {
  funcs.validate(g.order());
  return single_set_decider(g, funcs.f, funcs.g, limits, "anstee_fractional_gf");
}

ConditionReport lu_all_fractional_gf(const Graph &g, const DegreeFunctions &funcs,
                                     DeciderLimits limits) {
  funcs.validate(g.order());
  return single_set_decider(g, funcs.g, funcs.f, limits, "lu_all_fractional_gf");
}

ConditionReport has_all_fractional_ab_factors(const Graph &g, DegreeBounds bounds,
                                              DeciderLimits limits) {
  bounds.validate_strict();
  const auto n = g.order();
  return single_set_decider(g, std::vector<int>(n, bounds.a),
                            std::vector<int>(n, bounds.b), limits,
                            "has_all_fractional_ab_factors");
}

// ---------------------------------------------------------------------------

FractionalFactorTable::FractionalFactorTable(const Graph &g, DeciderLimits limits)
    : n_(g.order()) {
  check_order(g, std::min<std::size_t>(limits.subset_cap, 20),
              "FractionalFactorTable");
  const MaskGraph mg(g);
  const std::uint64_t full = mg.full();
  degrees_.resize((full + 1) * n_);
  for (std::uint64_t s = 0; s <= full; ++s)
    for (std::size_t v = 0; v < n_; ++v)
      degrees_[s * n_ + v] = ((s >> v) & 1U) != 0
                                 ? std::uint8_t{255}
                                 : static_cast<std::uint8_t>(mg.degree_into(v, full & ~s));
}

bool FractionalFactorTable::feasible(std::span<const int> p) const {
  if (p.size() != n_)
    throw InputError("FractionalFactorTable: demand size mismatch");
  const std::uint64_t subsets = std::uint64_t{1} << n_;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    const std::uint8_t *d = &degrees_[s * n_];
    std::int64_t value = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (d[v] == 255)
        value += p[v];
      else if (d[v] < p[v])
        value += d[v] - p[v];
    }
    if (value < 0)
      return false;
  }
  return true;
}

} // namespace factorspec
