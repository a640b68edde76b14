#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "factorspec/graph.hpp"

namespace factorspec {

inline constexpr double kDefaultSpectralTol = 1e-10;

enum class SpectralMethod { dense_iteration, quotient_3x3 };

std::string_view to_string(SpectralMethod m);

struct SpectralResult {
  double rho = 0.0;
  /// ||A x - rho x||_inf for the returned unit eigen-estimate x.
  double residual = 0.0;
  std::size_t iterations = 0;
  SpectralMethod method = SpectralMethod::dense_iteration;
};

/// Largest adjacency eigenvalue. Power iteration on A + I, run separately
/// on each connected component from the all-ones vector; the result is the
/// maximum over components. Throws NumericalError (carrying the best
/// estimate) once the iteration cap 100 n + 1000 is reached.
SpectralResult spectral_radius(const Graph &g, double tol = kDefaultSpectralTol);

/// sqrt(2m - n + 1). Only valid for connected graphs.
double hong_bound(const Graph &g);

/// Quotient matrix of A(G) with respect to a vertex partition.
struct QuotientMatrix {
  std::size_t k = 0;
  std::vector<double> entries; // row-major k x k
  std::vector<std::size_t> part_sizes;
  bool equitable = false;

  double at(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
};

/// Entry (i, j) is the average number of neighbours a vertex of part i has
/// in part j. Parts must be nonempty, disjoint and cover V(G).
QuotientMatrix quotient_matrix(const Graph &g, std::span<const VertexSet> parts);

/// Largest eigenvalue of an equitable quotient. k <= 3 is solved from the
/// characteristic polynomial; larger k by power iteration.
double leading_eigenvalue(const QuotientMatrix &b,
                          double tol = kDefaultSpectralTol);

/// det(x I - B) for a 3x3 quotient. Evaluated in exact integer arithmetic
/// when every entry and x are integral.
double charpoly_eval_3x3(const QuotientMatrix &b, double x);

/// Exact det(x I - B); requires integral entries.
std::int64_t charpoly_exact_3x3(const QuotientMatrix &b, std::int64_t x);

enum class Comparison { holds, fails, inconclusive };

std::string_view to_string(Comparison c);

/// Decides lhs < rhs, refusing to answer when |lhs - rhs| <= 10 tol.
Comparison strictly_less(double lhs, double rhs,
                         double tol = kDefaultSpectralTol);

} // namespace factorspec
