#include "factorspec/extremal.hpp"

#include <string>

#include "factorspec/error.hpp"

namespace factorspec {

std::string_view to_string(FactorMode m) {
  return m == FactorMode::integer ? "integer" : "fractional";
}

FactorMode parse_factor_mode(std::string_view text) {
  if (text == "integer")
    return FactorMode::integer;
  if (text == "fractional")
    return FactorMode::fractional;
  throw InputError("unknown mode '" + std::string(text) +
                   "' (expected integer or fractional)");
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  if (p < 0 || q <= 0)
    throw InputError("ceil_div: needs p >= 0 and q > 0");
  return (p + q - 1) / q;
}

namespace {

// K_pendant u K_tail, joined to K_clique; layout pendant, clique, tail.
ExtremalGraph pendant_clique_tail(std::size_t pendant, std::size_t clique,
                                  std::size_t tail) {
  const std::size_t n = pendant + clique + tail;
  const Vertex c0 = pendant;
  const Vertex t0 = pendant + clique;
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool same_pendant = v < c0;
      const bool touches_clique = (u >= c0 && u < t0) || (v >= c0 && v < t0);
      const bool same_tail = u >= t0;
      if (same_pendant || touches_clique || same_tail)
        b.add_edge(u, v);
    }
  }
  ExtremalGraph out{std::move(b).build(), {}};
  out.parts.push_back(VertexSet::range(n, 0, c0));
  out.parts.push_back(VertexSet::range(n, c0, t0));
  out.parts.push_back(VertexSet::range(n, t0, n));
  return out;
}

std::int64_t g1_clique(int a, int b) {
  return ceil_div(2LL * b * b + 2LL * b, a) + 2LL * b - 4;
}

} // namespace

ExtremalGraph build_hnb(std::size_t n, std::size_t b) {
  if (b < 2 || b + 1 > n)
    throw InputError("H_{n,b} needs 2 <= b <= n-1 (got n=" + std::to_string(n) +
                     ", b=" + std::to_string(b) + ")");
  return pendant_clique_tail(1, b - 1, n - b);
}

ExtremalGraph build_g1(int a, int b, std::size_t n) {
  if (a < 1 || a > b)
    throw InputError("G1 needs 1 <= a <= b");
  const auto clique = g1_clique(a, b);
  const auto tail = static_cast<std::int64_t>(n) - clique - 2;
  if (clique < 1 || tail < 1)
    throw InputError("G1: nonpositive part size (clique=" + std::to_string(clique) +
                     ", tail=" + std::to_string(tail) + ")");
  return pendant_clique_tail(2, static_cast<std::size_t>(clique),
                             static_cast<std::size_t>(tail));
}

ExtremalGraph build_g2(int b, std::size_t n) {
  if (b < 1)
    throw InputError("G2 needs b >= 1");
  const auto clique = static_cast<std::size_t>(4 * b);
  if (n < clique + 3)
    throw InputError("G2 needs n >= 4b+3 (got n=" + std::to_string(n) + ")");
  return pendant_clique_tail(2, clique, n - clique - 2);
}

ExtremalGraph build_k1_join(std::size_t n, std::size_t r) {
  if (r < 1 || r + 2 > n)
    throw InputError("K_1 join (K_r u K_{n-1-r}) needs 1 <= r <= n-2");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    b.add_edge(0, v);
  for (Vertex u = 1; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((u <= r) == (v <= r))
        b.add_edge(u, v);
  ExtremalGraph out{std::move(b).build(), {}};
  out.parts.push_back(VertexSet::range(n, 0, 1));
  out.parts.push_back(VertexSet::range(n, 1, r + 1));
  out.parts.push_back(VertexSet::range(n, r + 1, n));
  return out;
}

ConditionReport lemma24_witness(std::size_t n, int b, FactorMode mode, int a) {
  DegreeBounds bounds{a, b};
  bounds.validate_strict();
  if (static_cast<std::size_t>(b) + 1 > n)
    throw InputError("lemma24_witness needs b <= n-1");
  if (mode == FactorMode::fractional && static_cast<std::size_t>(b) + 2 > n)
    throw PreconditionError("lemma24_witness (fractional) needs n >= b+2");

  const auto h = build_hnb(n, static_cast<std::size_t>(b));
  ConditionReport r;
  r.witness_s = VertexSet(n);
  r.pairs_examined = 1;
  if (mode == FactorMode::integer) {
    const VertexSet t(n, {0});
    r.min_value = delta(h.graph, bounds, r.witness_s, t);
    r.threshold = -1;
    r.witness_t = t;
  } else {
    auto [value, t] = theta(h.graph, bounds, r.witness_s);
    r.min_value = value;
    r.threshold = 0;
    r.witness_t = std::move(t);
  }
  r.verdict = r.min_value >= r.threshold;
  return r;
}

double rho_hnb(std::size_t n, std::size_t b) {
  if (b < 2 || b + 1 > n)
    throw InputError("rho_hnb needs 2 <= b <= n-1");
  const double nd = static_cast<double>(n);
  const double bd = static_cast<double>(b);
  QuotientMatrix q;
  q.k = 3;
  q.part_sizes = {1, b - 1, n - b};
  q.equitable = true;
  q.entries = {0.0,     bd - 1.0, 0.0,
               1.0,     bd - 2.0, nd - bd,
               0.0,     bd - 1.0, nd - bd - 1.0};
  return leading_eigenvalue(q);
}

std::int64_t threshold_n(int a, int b, FactorMode mode) {
  if (mode == FactorMode::integer) {
    if (a < 3 || a >= b)
      throw InputError("integer threshold needs 3 <= a < b");
    return 2LL * b * b + 4LL * b;
  }
  if (a < 1 || a >= b)
    throw InputError("fractional threshold needs 1 <= a < b");
  return ceil_div(3LL * b * (b + a + 1), a) + 7;
}

std::int64_t g1g2_order(int a, int b) {
  if (a < 1 || a > b)
    throw InputError("g1g2_order needs 1 <= a <= b");
  return ceil_div(3LL * b * (b + 1), a) + 3LL * b + 7;
}

G1G2Check g1g2_check(int a, int b, std::int64_t n, double tol) {
  if (n < 1)
    throw InputError("g1g2_check: nonpositive order");
  G1G2Check out;
  out.a = a;
  out.b = b;
  out.n = n;
  out.c = ceil_div(2LL * b * b + 2LL * b, a);

  const auto g1 = build_g1(a, b, static_cast<std::size_t>(n));
  const auto q = quotient_matrix(g1.graph, g1.parts);
  out.f_n_minus_2 = charpoly_exact_3x3(q, n - 2);
  out.f_n_minus_3 = charpoly_exact_3x3(q, n - 3);
  const std::int64_t c = out.c;
  out.f_n_minus_2_closed = n * n - 4 * n - 2 * c * c - (8LL * b - 14) * c +
                           28LL * b - 21 - 8LL * b * b;
  const std::int64_t s = c + 2LL * b - 4;
  out.f_n_minus_3_closed = -2 * s * s;
  out.rho_g1_quotient = leading_eigenvalue(q, tol);
  out.rho_g1 = spectral_radius(g1.graph, tol).rho;
  out.rho_g2 = spectral_radius(build_g2(b, static_cast<std::size_t>(n)).graph, tol).rho;
  return out;
}

} // namespace factorspec
