#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitcensus/census.hpp"

namespace orbitcensus {

/// A closed-form estimate carried as log2 so that 2^(nk) never overflows.
struct AsymptoticEstimate {
  int n = 0;
  int p = 0;
  int k = 0;
  double log2_value = 0;
  std::vector<std::pair<std::string, double>> terms;  // log2 of each factor
};

namespace asym {

/// Z_k ~ 2^(nk) k^(-m) (2^p / (pi n))^((k-1) m) with m = 2^(p-2).
[[nodiscard]] auto asymptotic_Zk(int n, int p, int k) -> AsymptoticEstimate;

/// log2 of P_k ~ k^(-m) (2^p / (pi n))^((k-1) m).
[[nodiscard]] auto asymptotic_Pk_log2(int n, int p, int k) -> double;
[[nodiscard]] auto asymptotic_Pk(int n, int p, int k) -> double;

/// Largest cluster: (2^n / n) (2^p / (pi n))^m over necklaces, n times that over words.
[[nodiscard]] auto asymptotic_max_cluster(int n, int p, Level level) -> AsymptoticEstimate;

/// Density of rescaled cluster sizes, rho(t) = (-ln t)^(m-1) / (m-1)!, for t in (0, 1].
[[nodiscard]] auto rho(double t, int p) -> double;

/// P(t) = int_0^t rho = t sum_{j<m} (-ln t)^j / j!; P(0) = 0.
[[nodiscard]] auto P_theory(double t, int p) -> double;

/// int_0^1 rho(t) t^(k-1) dt by tanh-sinh quadrature.
[[nodiscard]] auto rho_moment(int k, int p) -> double;

}  // namespace asym
}  // namespace orbitcensus
