#include "factorspec/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "factorspec/error.hpp"

namespace factorspec {

std::string_view to_string(SpectralMethod m) {
  switch (m) {
  case SpectralMethod::dense_iteration:
    return "dense-iteration";
  case SpectralMethod::quotient_3x3:
    return "quotient-3x3";
  }
  return "unknown";
}

std::string_view to_string(Comparison c) {
  switch (c) {
  case Comparison::holds:
    return "holds";
  case Comparison::fails:
    return "fails";
  case Comparison::inconclusive:
    return "inconclusive";
  }
  return "unknown";
}

namespace {

struct ComponentResult {
  double rho = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Power iteration on A + I restricted to one component. `adj` holds local
// indices.
ComponentResult iterate_component(const std::vector<std::vector<std::size_t>> &adj,
                                  double tol, std::size_t cap) {
  const std::size_t s = adj.size();
  ComponentResult out;
  if (s == 1) {
    out.converged = true;
    return out;
  }
  std::vector<double> x(s, 1.0 / std::sqrt(static_cast<double>(s)));
  std::vector<double> y(s);
  double best = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= cap; ++it) {
    for (std::size_t v = 0; v < s; ++v) {
      double acc = x[v];
      for (auto u : adj[v])
        acc += x[u];
      y[v] = acc;
    }
    double lambda = 0.0;
    for (std::size_t v = 0; v < s; ++v)
      lambda += x[v] * y[v];
    double residual = 0.0;
    for (std::size_t v = 0; v < s; ++v)
      residual = std::max(residual, std::abs(y[v] - lambda * x[v]));
    best = lambda - 1.0;
    best_residual = residual;
    out.iterations = it;
    if (residual <= tol) {
      out.rho = best;
      out.residual = residual;
      out.converged = true;
      return out;
    }
    double norm = 0.0;
    for (auto value : y)
      norm += value * value;
    norm = std::sqrt(norm);
    for (std::size_t v = 0; v < s; ++v)
      x[v] = y[v] / norm;
  }
  out.rho = best;
  out.residual = best_residual;
  return out;
}

void require_partition(const Graph &g, std::span<const VertexSet> parts) {
  if (parts.empty())
    throw InputError("quotient_matrix: empty partition");
  VertexSet seen(g.order());
  for (const auto &p : parts) {
    if (p.universe() != g.order())
      throw InputError("quotient_matrix: part universe does not match graph");
    if (p.empty())
      throw InputError("quotient_matrix: empty part");
    if (p.intersects(seen))
      throw InputError("quotient_matrix: parts overlap");
    seen = seen | p;
  }
  if (seen.size() != g.order())
    throw InputError("quotient_matrix: parts do not cover the vertex set");
}

bool integral(double v) {
  return std::isfinite(v) && std::abs(v) < 9.0e15 && std::nearbyint(v) == v;
}

// Coefficients of det(xI - B) = x^3 + c2 x^2 + c1 x + c0.
struct Cubic {
  long double c2, c1, c0;

  long double operator()(long double x) const {
    return ((x + c2) * x + c1) * x + c0;
  }
  long double derivative(long double x) const {
    return (3 * x + 2 * c2) * x + c1;
  }
};

Cubic cubic_of(const QuotientMatrix &b) {
  auto m = [&](std::size_t i, std::size_t j) {
    return static_cast<long double>(b.at(i, j));
  };
  const long double trace = m(0, 0) + m(1, 1) + m(2, 2);
  const long double minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) +
                             m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                             m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const long double det =
      m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
      m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
      m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return {-trace, minors, -det};
}

double max_row_sum(const QuotientMatrix &b) {
  double best = 0.0;
  for (std::size_t i = 0; i < b.k; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < b.k; ++j)
      row += b.at(i, j);
    best = std::max(best, row);
  }
  return best;
}

// The quotient of a symmetric matrix has real eigenvalues, so Newton's
// method started right of the largest root descends monotonically onto it.
double largest_cubic_root(const QuotientMatrix &b) {
  const Cubic p = cubic_of(b);
  long double x = static_cast<long double>(max_row_sum(b)) + 1.0L;
  for (int it = 0; it < 500; ++it) {
    const long double fx = p(x);
    const long double dfx = p.derivative(x);
    if (fx <= 0 || dfx <= 0)
      break;
    const long double next = x - fx / dfx;
    if (!(next < x))
      break;
    x = next;
  }
  return static_cast<double>(x);
}

double power_iterate_quotient(const QuotientMatrix &b, double tol) {
  const std::size_t k = b.k;
  std::vector<double> x(k, 1.0), y(k);
  const std::size_t cap = 100 * k + 1000;
  double lambda = 0.0;
  double residual = 0.0;
  for (std::size_t it = 0; it < cap; ++it) {
    double xmax = *std::max_element(x.begin(), x.end());
    for (auto &v : x)
      v /= xmax;
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < k; ++j)
        acc += b.at(i, j) * x[j];
      y[i] = acc;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      num += y[i] * x[i];
      den += x[i] * x[i];
    }
    lambda = num / den;
    residual = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
    if (residual <= tol)
      return lambda - 1.0;
    x = y;
  }
  throw NumericalError("leading_eigenvalue: quotient iteration did not converge",
                       lambda - 1.0, residual);
}

} // namespace

SpectralResult spectral_radius(const Graph &g, double tol) {
  if (g.order() == 0)
    throw InputError("spectral_radius: graph has no vertices");
  if (!(tol > 0))
    throw InputError("spectral_radius: tolerance must be positive");

  const std::size_t cap = 100 * g.order() + 1000;
  SpectralResult result;
  result.method = SpectralMethod::dense_iteration;
  std::vector<std::size_t> local(g.order());
  for (const auto &comp : components_excluding(g, VertexSet(g.order()))) {
    const auto members = comp.members();
    for (std::size_t i = 0; i < members.size(); ++i)
      local[members[i]] = i;
    std::vector<std::vector<std::size_t>> adj(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Vertex u : g.neighbors(members[i]))
        adj[i].push_back(local[u]);

    const auto r = iterate_component(adj, tol, cap);
    result.iterations += r.iterations;
    if (!r.converged)
      throw NumericalError("spectral_radius: no convergence after " +
                               std::to_string(cap) + " iterations",
                           std::max(result.rho, r.rho), r.residual);
    result.rho = std::max(result.rho, r.rho);
    result.residual = std::max(result.residual, r.residual);
  }
  return result;
}

double hong_bound(const Graph &g) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError("hong_bound: graph must be connected");
  const double m = static_cast<double>(g.size());
  const double n = static_cast<double>(g.order());
  return std::sqrt(2.0 * m - n + 1.0);
}

QuotientMatrix quotient_matrix(const Graph &g, std::span<const VertexSet> parts) {
  require_partition(g, parts);
  QuotientMatrix q;
  q.k = parts.size();
  q.entries.assign(q.k * q.k, 0.0);
  q.equitable = true;
  for (const auto &p : parts)
    q.part_sizes.push_back(p.size());

  for (std::size_t i = 0; i < q.k; ++i) {
    const auto members = parts[i].members();
    for (std::size_t j = 0; j < q.k; ++j) {
      const auto pw = parts[j].words();
      std::size_t total = 0;
      std::optional<std::size_t> first;
      for (Vertex v : members) {
        const auto r = g.row(v);
        std::size_t c = 0;
        for (std::size_t w = 0; w < r.size(); ++w)
          c += static_cast<std::size_t>(std::popcount(r[w] & pw[w]));
        total += c;
        if (!first)
          first = c;
        else if (*first != c)
          q.equitable = false;
      }
      q.entries[i * q.k + j] =
          static_cast<double>(total) / static_cast<double>(members.size());
    }
  }
  return q;
}

double leading_eigenvalue(const QuotientMatrix &b, double tol) {
  if (!b.equitable)
    throw PreconditionError("leading_eigenvalue: partition is not equitable");
  switch (b.k) {
  case 0:
    throw InputError("leading_eigenvalue: empty matrix");
  case 1:
    return b.at(0, 0);
  case 2: {
    const long double tr = static_cast<long double>(b.at(0, 0)) + b.at(1, 1);
    const long double det = static_cast<long double>(b.at(0, 0)) * b.at(1, 1) -
                            static_cast<long double>(b.at(0, 1)) * b.at(1, 0);
    const long double disc = std::max(0.0L, tr * tr - 4 * det);
    return static_cast<double>((tr + std::sqrt(disc)) / 2);
  }
  case 3:
    return largest_cubic_root(b);
  default:
    return power_iterate_quotient(b, tol);
  }
}

std::int64_t charpoly_exact_3x3(const QuotientMatrix &b, std::int64_t x) {
  if (b.k != 3)
    throw InputError("charpoly: quotient matrix is not 3x3");
  for (double e : b.entries)
    if (!integral(e))
      throw InputError("charpoly: exact evaluation needs integral entries");
  __extension__ typedef __int128 wide;
  wide m[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m[i][j] = (i == j ? wide{x} : wide{0}) -
                static_cast<wide>(static_cast<std::int64_t>(b.at(i, j)));
  const wide det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det > std::numeric_limits<std::int64_t>::max() ||
      det < std::numeric_limits<std::int64_t>::min())
    throw InputError("charpoly: value overflows 64-bit integer");
  return static_cast<std::int64_t>(det);
}

double charpoly_eval_3x3(const QuotientMatrix &b, double x) {
  if (b.k != 3)
    throw InputError("charpoly: quotient matrix is not 3x3");
  const bool exact =
      integral(x) && std::abs(x) < 1e5 &&
      std::all_of(b.entries.begin(), b.entries.end(),
                  [](double e) { return integral(e) && std::abs(e) < 1e5; });
  if (exact)
    return static_cast<double>(
        charpoly_exact_3x3(b, static_cast<std::int64_t>(x)));
  return static_cast<double>(cubic_of(b)(static_cast<long double>(x)));
}

Comparison strictly_less(double lhs, double rhs, double tol) {
  const double margin = rhs - lhs;
  if (std::abs(margin) <= 10.0 * tol)
    return Comparison::inconclusive;
  return margin > 0 ? Comparison::holds : Comparison::fails;
}

} // namespace factorspec
