#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "factorspec/conditions.hpp"
#include "factorspec/graph.hpp"
#include "factorspec/spectral.hpp"

namespace factorspec {

enum class FactorMode { integer, fractional };

std::string_view to_string(FactorMode m);
/// Parses "integer" / "fractional"; throws InputError otherwise.
FactorMode parse_factor_mode(std::string_view text);

/// A named construction together with its natural 3-part equitable
/// partition (pendant part, join clique, tail clique).
struct ExtremalGraph {
  Graph graph;
  std::vector<VertexSet> parts;
};

/// ceil(p / q) for p >= 0, q > 0.
std::int64_t ceil_div(std::int64_t p, std::int64_t q);

/// K_{b-1} join (K_1 u K_{n-b}) with the K_1 vertex at 0, the join clique
/// at 1..b-1 and the tail clique at b..n-1. Requires 2 <= b <= n-1.
ExtremalGraph build_hnb(std::size_t n, std::size_t b);

/// K_c join (K_2 u K_{n-c-2}) where c = ceil((2b^2+2b)/a) + 2b - 4.
/// Layout: K_2 at 0..1, join clique next, tail last.
ExtremalGraph build_g1(int a, int b, std::size_t n);

/// K_{4b} join (K_2 u K_{n-4b-2}); requires n >= 4b+3.
ExtremalGraph build_g2(int b, std::size_t n);

/// K_1 join (K_r u K_{n-1-r}), hub at 0. Requires 1 <= r <= n-2.
ExtremalGraph build_k1_join(std::size_t n, std::size_t r);

/// Evaluates delta (integer) or theta (fractional) at S = {}, T = {0} of
/// H_{n,b} and checks it against -2 / -1. The report's min_value is the
/// value at this witness, not a global minimum. Integer mode needs
/// 1 <= a < b <= n-1; fractional mode additionally b <= n-2.
ConditionReport lemma24_witness(std::size_t n, int b, FactorMode mode, int a = 1);

/// Largest root of the characteristic cubic of H_{n,b}'s quotient.
double rho_hnb(std::size_t n, std::size_t b);

/// Smallest admissible order: 2b^2+4b (integer, 3 <= a < b) or
/// ceil(3b(b+a+1)/a) + 7 (fractional, 1 <= a < b).
std::int64_t threshold_n(int a, int b, FactorMode mode);

/// Quantities of the G1 / G2 comparison at a given order.
struct G1G2Check {
  int a = 0;
  int b = 0;
  std::int64_t n = 0;
  /// ceil((2b^2+2b)/a)
  std::int64_t c = 0;
  /// det((n-2)I - B) and det((n-3)I - B) of G1's quotient, exact.
  std::int64_t f_n_minus_2 = 0;
  std::int64_t f_n_minus_3 = 0;
  /// Closed forms n^2-4n-2c^2-(8b-14)c+28b-21-8b^2 and -2(c+2b-4)^2.
  std::int64_t f_n_minus_2_closed = 0;
  std::int64_t f_n_minus_3_closed = 0;
  double rho_g1 = 0.0;
  double rho_g2 = 0.0;
  double rho_g1_quotient = 0.0;
};

/// Smallest order with n >= 3b(b+1)/a + 3b + 7.
std::int64_t g1g2_order(int a, int b);

/// Builds G1 and G2 at order n and evaluates every quantity above.
G1G2Check g1g2_check(int a, int b, std::int64_t n,
                           double tol = kDefaultSpectralTol);

} // namespace factorspec
