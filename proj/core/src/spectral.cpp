#include "orbitcensus/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "orbitcensus/error.hpp"

namespace orbitcensus::spectral {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_order(int p, int lo, int hi) {
  if (p < lo || p > hi) {
    throw ParameterError("matrix order p=" + std::to_string(p) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
}

auto dim_of(int p) -> Eigen::Index { return Eigen::Index{1} << p; }

auto order_of_length(std::size_t len) -> int {
  int p = 0;
  while ((std::size_t{1} << p) < len) ++p;
  if ((std::size_t{1} << p) != len || p < 1) throw ParameterError("phase vector length must be a power of two");
  return p;
}

auto max_abs(const RealMatrix& m) -> double { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

auto matrix_power(const RealMatrix& m, int k) -> RealMatrix {
  RealMatrix r = RealMatrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

auto scaled_log_trace_square(const ComplexMatrix& half, int n) -> double {
  return std::log(std::norm(trace_power(half, n)));
}

auto cluster(std::vector<double> values) -> std::vector<Eigenvalue> {
  std::sort(values.begin(), values.end());
  std::vector<Eigenvalue> out;
  for (double v : values) {
    if (!out.empty() && std::abs(v - out.back().value) < 1e-8) {
      ++out.back().multiplicity;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

auto merge(std::vector<Eigenvalue> list) -> std::vector<Eigenvalue> {
  std::sort(list.begin(), list.end(), [](auto& a, auto& b) { return a.value < b.value; });
  std::vector<Eigenvalue> out;
  for (const auto& e : list) {
    if (e.multiplicity == 0) continue;
    if (!out.empty() && out.back().value == e.value) {
      out.back().multiplicity += e.multiplicity;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

auto compare_spectrum(const RealMatrix& m, std::vector<Eigenvalue> expected) -> SpectrumReport {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  SpectrumReport report;
  report.expected = merge(std::move(expected));
  report.observed = cluster({ev.data(), ev.data() + ev.size()});
  report.multiplicities_match = report.observed.size() == report.expected.size();
  report.residual = report.multiplicities_match ? 0.0 : 1e300;
  if (report.multiplicities_match) {
    for (std::size_t i = 0; i < report.expected.size(); ++i) {
      report.multiplicities_match &= report.observed[i].multiplicity == report.expected[i].multiplicity;
      report.residual = std::max(report.residual, std::abs(report.observed[i].value - report.expected[i].value));
    }
  }
  return report;
}

}  // namespace

auto build_Q0_Q1(int p) -> std::pair<RealMatrix, RealMatrix> {
  require_order(p, 1, 10);
  const auto d = dim_of(p);
  const auto half = d / 2;
  RealMatrix q0 = RealMatrix::Zero(d, d);
  RealMatrix q1 = RealMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    q0(i, i / 2) = 1.0;
    q1(i, half + i / 2) = 1.0;
  }
  return {q0, q1};
}

auto build_Q(int p) -> RealMatrix {
  auto [q0, q1] = build_Q0_Q1(p);
  return q0 + q1;
}

auto build_R_S(int p) -> std::pair<RealMatrix, RealMatrix> {
  require_order(p, 1, 10);
  const auto d = dim_of(p);
  const auto half = d / 2;
  RealMatrix r = RealMatrix::Zero(d, half);
  RealMatrix s = RealMatrix::Zero(half, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    r(a, a / 2) = 1.0;
    s(a % half, a) = 1.0;
  }
  return {r, s};
}

auto build_Qp(int p) -> RealMatrix { return matrix_power(build_Q(p) / 2.0, p); }

auto phase_diagonal(const std::vector<double>& phases) -> ComplexMatrix {
  const auto d = static_cast<Eigen::Index>(phases.size());
  ComplexMatrix l = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) l(i, i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
  return l;
}

auto trace_power(const ComplexMatrix& m, int n, double scale) -> Complex {
  if (n < 1) throw ParameterError("trace power needs n >= 1");
  const ComplexMatrix base = m * scale;
  ComplexMatrix acc = base;
  for (int i = 1; i < n; ++i) acc = acc * base;
  return acc.trace();
}

auto generating_trace(const std::vector<double>& phases, int n) -> Complex {
  const int p = order_of_length(phases.size());
  const ComplexMatrix m = build_Q(p).cast<Complex>() * phase_diagonal(phases);
  const Complex t = trace_power(m, n, 0.5);
  return {std::ldexp(t.real(), n), std::ldexp(t.imag(), n)};
}

auto reduced_transfer(const std::vector<double>& phases) -> ComplexMatrix {
  const int p = order_of_length(phases.size());
  auto [r, s] = build_R_S(p);
  return s.cast<Complex>() * phase_diagonal(phases) * r.cast<Complex>();
}

auto reduced_matrix(int p, const std::vector<double>& phases) -> ComplexMatrix {
  require_order(p, 2, 11);
  if (static_cast<Eigen::Index>(phases.size()) != dim_of(p - 1)) {
    throw ParameterError("reduced matrix needs 2^(p-1) phases");
  }
  auto [q0, q1] = build_Q0_Q1(p - 1);
  return phase_diagonal(phases) * q0.cast<Complex>() + q1.cast<Complex>();
}

auto log_trace_square(int p, const std::vector<double>& phases, int n) -> double {
  return scaled_log_trace_square(reduced_matrix(p, phases) * 0.5, n) + 2.0 * n * std::numbers::ln2;
}

auto build_F_G(int p) -> std::pair<RealMatrix, RealMatrix> {
  auto [q0, q1] = build_Q0_Q1(p);
  const RealMatrix qp = build_Qp(p);
  const RealMatrix id = RealMatrix::Identity(q0.rows(), q0.cols());
  return {id - q1 + qp, id - q0 + qp};
}

auto gauge_residual(int p, int n, int samples, unsigned seed) -> double {
  require_order(p, 1, 10);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const auto d = dim_of(p);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> phi(static_cast<std::size_t>(d));
    std::vector<double> xi(static_cast<std::size_t>(d / 2));
    for (auto& x : phi) x = angle(rng);
    for (auto& x : xi) x = angle(rng);
    const double common = angle(rng);
    const ComplexMatrix q = reduced_transfer(phi);
    const ComplexMatrix l = phase_diagonal(xi);
    const ComplexMatrix moved = std::polar(1.0, -common) * l * q * l.adjoint();
    const Complex lhs = trace_power(moved, n, 0.5) * std::polar(1.0, n * common);
    const Complex rhs = trace_power(q, n, 0.5);
    worst = std::max(worst, std::abs(lhs - rhs));  // both scaled by 2^-n, so relative to Tr Q^n
  }
  return worst;
}

auto jacobian_determinant(int p) -> double {
  auto [f, g] = build_F_G(p);
  const auto d = f.rows();
  RealMatrix block = RealMatrix::Identity(2 * d, 2 * d);
  block.topRightCorner(d, d) = g * f.inverse();
  return block.determinant();
}

auto proposition1_check(double alpha, int p) -> Proposition1Residuals {
  auto [q0, q1] = build_Q0_Q1(p);
  const RealMatrix qp = build_Qp(p);
  const RealMatrix id = RealMatrix::Identity(q0.rows(), q0.cols());
  Proposition1Residuals r;
  r.q0 = std::abs((id - alpha * (q0 - qp)).determinant() - 1.0);
  r.q1 = std::abs((id - alpha * (q1 - qp)).determinant() - 1.0);
  r.full = std::abs((id - alpha * (q0 + q1 - qp)).determinant() - (1.0 - alpha));
  return r;
}

auto build_B(int p) -> RealMatrix {
  auto [q0, q1] = build_Q0_Q1(p);
  const RealMatrix half = (q0 + q1) / 2.0;
  const auto d = q0.rows();
  RealMatrix sum = RealMatrix::Zero(d, d);
  RealMatrix power = RealMatrix::Identity(d, d);
  for (int k = 0; k < p; ++k) {
    sum += power;
    power = power * half;
  }
  const RealMatrix qp = power;  // (Q/2)^p
  const RealMatrix qbar = q0 * sum;
  return std::ldexp(1.0, -p - 1) *
         (qbar + qbar.transpose() + 2.0 * RealMatrix::Identity(d, d) - (1.0 + 2.0 * p) * qp);
}

auto build_M(int s) -> RealMatrix {
  const RealMatrix half = build_Q(s) / 2.0;
  const auto d = half.rows();
  RealMatrix m = RealMatrix::Identity(d, d);
  RealMatrix power = RealMatrix::Identity(d, d);
  for (int r = 1; r < s; ++r) {
    power = power * half;
    m += power + power.transpose();
  }
  const RealMatrix qs = power * half;
  return m - (2.0 * s - 1.0) * qs;
}

auto build_Mtilde(int p) -> RealMatrix {
  const RealMatrix m = build_M(p);
  return RealMatrix::Identity(m.rows(), m.cols()) + m + 3.0 * build_Qp(p);
}

auto expected_spectrum_M(int s) -> std::vector<Eigenvalue> {
  require_order(s, 2, 10);
  std::vector<Eigenvalue> e{{0.0, 1 << (s - 1)}, {static_cast<double>(s), 1}};
  for (int k = 0; k <= s - 2; ++k) e.push_back({k + 1.0, 1 << (s - k - 2)});
  return merge(e);
}

auto expected_spectrum_Mtilde(int p) -> std::vector<Eigenvalue> {
  require_order(p, 2, 10);
  std::vector<Eigenvalue> e{{p + 1.0, 1}, {4.0, 1}, {1.0, (1 << (p - 1)) - 1}};
  for (int k = 0; k <= p - 2; ++k) e.push_back({k + 2.0, 1 << (p - k - 2)});
  return merge(e);
}

auto spectrum_M(int s) -> SpectrumReport { return compare_spectrum(build_M(s), expected_spectrum_M(s)); }

auto spectrum_Mtilde(int p) -> SpectrumReport {
  return compare_spectrum(build_Mtilde(p), expected_spectrum_Mtilde(p));
}

auto product_identity(int p) -> std::pair<double, double> {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(build_M(p + 1), Eigen::EigenvaluesOnly);
  double prod = 1.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double l = solver.eigenvalues()(i);
    if (std::abs(l) > 1e-8) prod *= l;
  }
  return {prod, build_Mtilde(p).determinant() / 4.0};
}

auto relation_residuals(int p) -> std::vector<std::pair<std::string, double>> {
  auto [q0, q1] = build_Q0_Q1(p);
  auto [r, s] = build_R_S(p);
  const RealMatrix q = q0 + q1;
  const RealMatrix qp = build_Qp(p);
  const auto d = q.rows();
  const RealMatrix id = RealMatrix::Identity(d, d);

  double qk_qp = 0, q0k_qp = 0, q1k_qp = 0, qpk = 0, powers = 0, powers01 = 0, trace_q = 0, trace01 = 0;
  RealMatrix qk = id, q0k = id, q1k = id, qpp = id, diff = id, diff0 = id, diff1 = id;
  for (int k = 1; k <= 2 * p; ++k) {
    qk = qk * q;
    q0k = q0k * q0;
    q1k = q1k * q1;
    qpp = qpp * qp;
    diff = diff * (q - qp);
    diff0 = diff0 * (q0 - qp);
    diff1 = diff1 * (q1 - qp);
    const double scale = std::ldexp(1.0, k);
    qk_qp = std::max({qk_qp, max_abs(qk * qp - scale * qp), max_abs(qp * qk - scale * qp)});
    q0k_qp = std::max(q0k_qp, max_abs(q0k * qp - qp));
    q1k_qp = std::max(q1k_qp, max_abs(q1k * qp - qp));
    qpk = std::max(qpk, max_abs(qpp - qp));
    powers = std::max(powers, max_abs(diff - (qk - (scale - 1.0) * qp)) / scale);
    powers01 = std::max({powers01, max_abs(diff0 - (q0 - qp) * matrix_power(q0, k - 1)),
                         max_abs(diff1 - (q1 - qp) * matrix_power(q1, k - 1))});
    trace_q = std::max(trace_q, std::abs(qk.trace() - scale) / scale);
    trace01 = std::max({trace01, std::abs(q0k.trace() - 1.0), std::abs(q1k.trace() - 1.0),
                        std::abs((qp * q0k).trace() - 1.0), std::abs((qp * q1k).trace() - 1.0)});
  }
  return {
      {"Q=Q0+Q1=RS", max_abs(q - r * s)},
      {"Qp_entries", max_abs(qp - RealMatrix::Constant(d, d, std::ldexp(1.0, -p)))},
      {"Q^k Qp=Qp Q^k=2^k Qp", qk_qp},
      {"Q0^k Qp=Qp", q0k_qp},
      {"Q1^k Qp=Qp", q1k_qp},
      {"Qp^k=Qp", qpk},
      {"Q0^T Q0+Q1^T Q1=2", max_abs(q0.transpose() * q0 + q1.transpose() * q1 - 2.0 * id)},
      {"Tr Q^k=2^k", trace_q},
      {"Tr Q01^k=Tr Qp Q01^k=1", trace01},
      {"(Q01-Qp)^k=(Q01-Qp)Q01^(k-1)", powers01},
      {"(Q-Qp)^k=Q^k-(2^k-1)Qp", powers},
  };
}

auto saddle_check(int n, int p) -> SaddleReport {
  require_order(p, 2, 4);
  if (n < 2 || n > 200) throw ParameterError("saddle check supports 2 <= n <= 200");
  const auto d = dim_of(p - 1);
  const auto dz = static_cast<std::size_t>(d);
  auto [q0r, q1r] = build_Q0_Q1(p - 1);
  const RealMatrix a0 = q0r / 2.0;
  const RealMatrix a = (q0r + q1r) / 2.0;

  // Scaled objective: the constant 2n log 2 drops out of every difference.
  auto f = [&](const std::vector<double>& phi) { return scaled_log_trace_square(reduced_matrix(p, phi) * 0.5, n); };

  SaddleReport rep;
  rep.n = n;
  rep.p = p;
  const double h = 1e-5;
  for (std::size_t j = 0; j < dz; ++j) {
    std::vector<double> plus(dz, 0.0), minus(dz, 0.0);
    plus[j] = h;
    minus[j] = -h;
    rep.gradient_max = std::max(rep.gradient_max, std::abs((f(plus) - f(minus)) / (2 * h)));
  }

  // W_k = A0 A^k; Tr A^n = 1 because every row of A sums to 1 and the trace is 2^-n Tr Q^n.
  std::vector<RealMatrix> w(static_cast<std::size_t>(n));
  RealMatrix ak = RealMatrix::Identity(d, d);
  for (int k = 0; k < n; ++k) {
    w[static_cast<std::size_t>(k)] = a0 * ak;
    ak = ak * a;
  }
  const double total = ak.trace();
  const Eigen::VectorXd t = w[static_cast<std::size_t>(n - 1)].diagonal();
  RealMatrix sm = RealMatrix::Zero(d, d);
  for (int k = 0; k <= n - 2; ++k) {
    sm += w[static_cast<std::size_t>(k)].transpose().cwiseProduct(w[static_cast<std::size_t>(n - 2 - k)]);
  }
  rep.hessian = (2.0 / total) * (-n * RealMatrix(t.asDiagonal()) - n * sm) +
                (2.0 * n * n / (total * total)) * (t * t.transpose());

  const double hh = 1e-4;
  rep.hessian_fd = RealMatrix::Zero(d, d);
  for (std::size_t i = 0; i < dz; ++i) {
    for (std::size_t j = 0; j < dz; ++j) {
      auto at = [&](double si, double sj) {
        std::vector<double> phi(dz, 0.0);
        phi[i] += si * hh;
        phi[j] += sj * hh;
        return f(phi);
      };
      rep.hessian_fd(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * hh * hh);
    }
  }
  rep.hessian_fd_residual = max_abs(rep.hessian - rep.hessian_fd);

  const RealMatrix scaled = -rep.hessian / static_cast<double>(n);
  rep.det_scaled = scaled.determinant();
  rep.reference_residual = max_abs(scaled - build_B(p - 1));
  rep.gaussian_log2_z2 = 2.0 * n - 0.5 * static_cast<double>(d) * std::log2(kTwoPi * n) - 0.5 * std::log2(rep.det_scaled);
  return rep;
}

}  // namespace orbitcensus::spectral
