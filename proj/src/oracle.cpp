#include "factorspec/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "factorspec/error.hpp"

namespace factorspec {

std::int64_t DemandFunction::total() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

namespace {

std::optional<std::uint64_t> power(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    result *= base;
  }
  return result;
}

} // namespace

DemandEnumerator::DemandEnumerator(std::size_t n, DegreeBounds bounds,
                                   bool even_total, std::uint64_t cursor)
    : n_(n), bounds_(bounds), even_total_(even_total), cursor_(cursor) {
  bounds.validate();
  if (n == 0)
    throw InputError("DemandEnumerator: need at least one vertex");
  space_ = power(static_cast<std::uint64_t>(bounds.b - bounds.a + 1), n);
}

std::optional<DemandFunction> DemandEnumerator::next() {
  if (!space_)
    throw ResourceError("DemandEnumerator: demand space exceeds 2^64");
  const auto base = static_cast<std::uint64_t>(bounds_.b - bounds_.a + 1);
  while (cursor_ < *space_) {
    DemandFunction h{std::vector<int>(n_)};
    std::uint64_t rank = cursor_++;
    for (std::size_t i = n_; i-- > 0;) {
      h.values[i] = bounds_.a + static_cast<int>(rank % base);
      rank /= base;
    }
    if (!even_total_ || h.total() % 2 == 0)
      return h;
  }
  return std::nullopt;
}

std::vector<DemandFunction> enumerate_admissible(std::size_t n,
                                                 DegreeBounds bounds,
                                                 bool even_total) {
  std::vector<DemandFunction> out;
  DemandEnumerator e(n, bounds, even_total);
  while (auto h = e.next())
    out.push_back(std::move(*h));
  return out;
}

TutteGadget tutte_gadget(const Graph &g, const DemandFunction &h) {
  const auto n = g.order();
  if (h.size() != n)
    throw InputError("tutte_gadget: demand size does not match graph order");
  for (Vertex v = 0; v < n; ++v)
    if (h[v] < 0 || static_cast<std::size_t>(h[v]) > g.degree(v))
      throw InputError("tutte_gadget: h(" + std::to_string(v) +
                       ") outside 0..d(v)");

  TutteGadget out;
  // external[v][i] is e(v, neighbors(v)[i]).
  std::vector<std::vector<Vertex>> nbrs(n), external(n), internal(n);
  for (Vertex v = 0; v < n; ++v) {
    nbrs[v] = g.neighbors(v);
    for (Vertex u : nbrs[v]) {
      external[v].push_back(out.nodes.size());
      out.nodes.push_back({v, u});
    }
    const auto slack = nbrs[v].size() - static_cast<std::size_t>(h[v]);
    for (std::size_t i = 0; i < slack; ++i) {
      internal[v].push_back(out.nodes.size());
      out.nodes.push_back({v, std::nullopt});
    }
  }

  GraphBuilder b(out.nodes.size());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x : internal[v])
      for (Vertex e : external[v])
        b.add_edge(x, e);
    for (std::size_t i = 0; i < nbrs[v].size(); ++i) {
      const Vertex u = nbrs[v][i];
      if (u < v)
        continue;
      const auto &nu = nbrs[u];
      const auto j = static_cast<std::size_t>(
          std::lower_bound(nu.begin(), nu.end(), v) - nu.begin());
      b.add_edge(external[v][i], external[u][j]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

HFactorResult has_h_factor(const Graph &g, const DemandFunction &h) {
  const auto n = g.order();
  if (h.size() != n)
    throw InputError("has_h_factor: demand size does not match graph order");
  for (Vertex v = 0; v < n; ++v)
    if (h[v] < 0 || static_cast<std::size_t>(h[v]) > g.degree(v))
      return {};
  if (h.total() % 2 != 0)
    return {};

  const auto gadget = tutte_gadget(g, h);
  const auto m = perfect_matching(gadget.graph);
  if (!m)
    return {};
  GraphBuilder factor(n);
  for (const auto &[x, y] : m->edges) {
    const auto &nx = gadget.nodes[x];
    const auto &ny = gadget.nodes[y];
    if (nx.neighbor && ny.neighbor && nx.owner != ny.owner)
      factor.add_edge(nx.owner, ny.owner);
  }
  return {true, std::move(factor).build()};
}

namespace {

void check_budget(std::size_t n, DegreeBounds bounds, OracleLimits limits,
                  const char *what) {
  bounds.validate();
  const auto space = power(static_cast<std::uint64_t>(bounds.b - bounds.a + 1), n);
  if (!space || *space > limits.demand_budget)
    throw ResourceError(std::string(what) + ": (b-a+1)^n exceeds the budget of " +
                        std::to_string(limits.demand_budget) + " demand functions");
}

} // namespace

OracleResult all_ab_factors_oracle(const Graph &g, DegreeBounds bounds,
                                   OracleLimits limits) {
  if (g.order() == 0)
    throw InputError("all_ab_factors_oracle: graph has no vertices");
  check_budget(g.order(), bounds, limits, "all_ab_factors_oracle");
  OracleResult r;
  DemandEnumerator e(g.order(), bounds, true);
  while (auto h = e.next()) {
    ++r.demands_checked;
    if (!has_h_factor(g, *h).exists) {
      r.holds = false;
      r.counterexample = std::move(h);
      break;
    }
  }
  return r;
}

OracleResult all_fractional_oracle(const Graph &g, DegreeBounds bounds,
                                   OracleLimits limits) {
  if (g.order() == 0)
    throw InputError("all_fractional_oracle: graph has no vertices");
  check_budget(g.order(), bounds, limits, "all_fractional_oracle");
  const FractionalFactorTable table(g);
  OracleResult r;
  DemandEnumerator e(g.order(), bounds, false);
  while (auto p = e.next()) {
    ++r.demands_checked;
    if (!table.feasible(p->values)) {
      r.holds = false;
      r.counterexample = std::move(p);
      break;
    }
  }
  return r;
}

} // namespace factorspec
