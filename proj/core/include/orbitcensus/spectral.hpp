#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace orbitcensus {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

namespace spectral {

// Matrix builders accept order p >= 1; order 1 is the two-edge graph where every edge follows
// every edge. Dimensions are 2^p unless stated otherwise.

/// Edge adjacency of G_p: Q_{ab} = 1 iff edge b can follow edge a.
[[nodiscard]] auto build_Q(int p) -> RealMatrix;

/// Q0 keeps the successors with leading bit 0, Q1 those with leading bit 1.
[[nodiscard]] auto build_Q0_Q1(int p) -> std::pair<RealMatrix, RealMatrix>;

/// R (2^p x 2^(p-1)) maps an edge to its tail, S (2^(p-1) x 2^p) a vertex to the edges entering it.
[[nodiscard]] auto build_R_S(int p) -> std::pair<RealMatrix, RealMatrix>;

/// Q_p = (Q/2)^p.
[[nodiscard]] auto build_Qp(int p) -> RealMatrix;

[[nodiscard]] auto phase_diagonal(const std::vector<double>& phases) -> ComplexMatrix;

/// Tr(Q Lambda(phi))^n for a full phase vector of length 2^p.
[[nodiscard]] auto generating_trace(const std::vector<double>& phases, int n) -> Complex;

/// Q'(phi) = S Lambda(phi) R, the 2^(p-1)-dimensional matrix with the same trace powers.
[[nodiscard]] auto reduced_transfer(const std::vector<double>& phases) -> ComplexMatrix;

/// The reduced matrix with phases on the leading-bit-0 half only: Lambda(phi) Q0 + Q1 built at
/// order p-1, for a phase vector of length 2^(p-1).
[[nodiscard]] auto reduced_matrix(int p, const std::vector<double>& phases) -> ComplexMatrix;

/// Tr M^n by n-1 multiplications. `scale` multiplies M before powering; the result is not
/// rescaled.
[[nodiscard]] auto trace_power(const ComplexMatrix& m, int n, double scale = 1.0) -> Complex;

/// log |Tr Qred(phi)^n|^2, evaluated on Qred/2 to stay in range.
[[nodiscard]] auto log_trace_square(int p, const std::vector<double>& phases, int n) -> double;

// ---- change of variables -------------------------------------------------------------

/// G = 1 - Q0 + Q_p and F = 1 - Q1 + Q_p.
[[nodiscard]] auto build_F_G(int p) -> std::pair<RealMatrix, RealMatrix>;

/// Largest relative deviation of Tr(e^{-i xi} L(xi) Q' L(xi)^+)^n e^{i n xi} from Tr Q'^n over
/// `samples` random gauges.
[[nodiscard]] auto gauge_residual(int p, int n, int samples, unsigned seed) -> double;

/// Determinant of the block transform [[1, G F^-1], [0, 1]].
[[nodiscard]] auto jacobian_determinant(int p) -> double;

// ---- determinant and spectra ---------------------------------------------------------

struct Proposition1Residuals {
  double q0 = 0;    // |det(1 - a (Q0 - Q_p)) - 1|
  double q1 = 0;    // |det(1 - a (Q1 - Q_p)) - 1|
  double full = 0;  // |det(1 - a (Q - Q_p)) - (1 - a)|
};

[[nodiscard]] auto proposition1_check(double alpha, int p) -> Proposition1Residuals;

/// B = 2^(-p-1) (Qbar + Qbar^T + 2 - (1+2p) Q_p) with Qbar = Q0 sum_{k<p} (Q/2)^k.
[[nodiscard]] auto build_B(int p) -> RealMatrix;

/// M_s = 1 + sum_{r=1}^{s-1} [(Q/2)^r + (Q^T/2)^r] - (2s-1) Q_s at order s.
[[nodiscard]] auto build_M(int s) -> RealMatrix;

/// Mtilde_p = 1 + M_p + 3 Q_p.
[[nodiscard]] auto build_Mtilde(int p) -> RealMatrix;

struct Eigenvalue {
  double value = 0;
  int multiplicity = 0;
};

struct SpectrumReport {
  std::vector<Eigenvalue> expected;
  std::vector<Eigenvalue> observed;  // eigenvalues clustered within 1e-8
  double residual = 0;               // max |observed - expected| after matching, 1e300 if shapes differ
  bool multiplicities_match = false;
};

[[nodiscard]] auto expected_spectrum_M(int s) -> std::vector<Eigenvalue>;
[[nodiscard]] auto expected_spectrum_Mtilde(int p) -> std::vector<Eigenvalue>;
[[nodiscard]] auto spectrum_M(int s) -> SpectrumReport;
[[nodiscard]] auto spectrum_Mtilde(int p) -> SpectrumReport;

/// Product of the non-zero eigenvalues of M_{p+1} and det(Mtilde_p) / 4.
[[nodiscard]] auto product_identity(int p) -> std::pair<double, double>;

/// Named max-abs residuals of the exact matrix relations among Q, Q0, Q1, Q_p.
[[nodiscard]] auto relation_residuals(int p) -> std::vector<std::pair<std::string, double>>;

// ---- saddle point --------------------------------------------------------------------

struct SaddleReport {
  int n = 0;
  int p = 0;
  double gradient_max = 0;           // central differences, step 1e-5
  RealMatrix hessian;                // analytic, reduced phases
  RealMatrix hessian_fd;             // central second differences
  double hessian_fd_residual = 0;    // max |analytic - fd|
  double det_scaled = 0;             // det(-H/n)
  double reference_residual = -1;    // max |(-H/n) - B_{p-1}|
  double gaussian_log2_z2 = 0;       // 2n + log2[(2 pi n)^(-d/2) det(-H/n)^(-1/2)], d = 2^(p-1)
};

/// Gradient and Hessian of log|Tr Qred(phi)^n|^2 at phi = 0. p in [2, 4], n in [2, 200].
[[nodiscard]] auto saddle_check(int n, int p) -> SaddleReport;

}  // namespace spectral
}  // namespace orbitcensus
