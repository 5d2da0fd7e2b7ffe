#pragma once

#include <complex>
#include <vector>

#include "orbitcensus/bigint.hpp"
#include "orbitcensus/edge_counts.hpp"

namespace orbitcensus::fourier {

using WideComplex = std::complex<long double>;

/// Tr(Q Lambda(2 pi m / L))^n on the full L^4 grid of G_2, scaled by 2^-n.
///
/// As a function of each phase the trace is a trigonometric polynomial of degree <= n, so for
/// L >= n + 1 the discrete transform on this grid recovers every coefficient |C_n| exactly.
class FullTraceGrid {
 public:
  FullTraceGrid(int n, int L, unsigned workers = 1);

  [[nodiscard]] auto n() const noexcept -> int { return n_; }
  [[nodiscard]] auto grid() const noexcept -> int { return L_; }

  /// Inverse transform at v, rounded; throws NumericalError when the value is not within 1e-6
  /// of an integer.
  [[nodiscard]] auto cluster_size(const EdgeCountVector& v) const -> BigInt;

  /// The unrounded inverse transform (real and imaginary part).
  [[nodiscard]] auto raw_coefficient(const EdgeCountVector& v) const -> WideComplex;

 private:
  int n_;
  int L_;
  std::vector<WideComplex> table_;
  std::vector<WideComplex> roots_;  // e^{-2 pi i j / L}
};

constexpr long double kRoundingTolerance = 1e-6L;
constexpr double kMaxMomentTerms = 2e8;

/// |C_n| by discrete Fourier inversion of the generating trace. p = 2 only; L = 0 picks n + 1.
[[nodiscard]] auto fourier_cluster_size(const EdgeCountVector& v, int L = 0, unsigned workers = 1) -> BigInt;

/// Z_k from the reduced 2^(p-1)-phase trace table: the k-th phase vector is fixed to minus the
/// sum of the other k - 1, which is the discrete form of the periodic delta constraint.
/// p in {2, 3}; at most 2e8 terms; L = 0 picks n + 1.
[[nodiscard]] auto fourier_moment(int n, int p, unsigned k, int L = 0, unsigned workers = 1) -> BigInt;

}  // namespace orbitcensus::fourier
