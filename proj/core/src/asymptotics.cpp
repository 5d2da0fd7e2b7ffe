#include "orbitcensus/asymptotics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

#include "orbitcensus/error.hpp"

namespace orbitcensus::asym {

namespace {

void require(int n, int p, int k) {
  if (n < 1) throw ParameterError("n must be positive");
  if (p < 2 || p > 30) throw ParameterError("p must lie in [2, 30]");
  if (k < 1) throw ParameterError("k must be at least 1");
}

auto exponent_m(int p) -> double { return std::ldexp(1.0, p - 2); }

// log2(2^p / (pi n))
auto spread_log2(int n, int p) -> double { return p - std::log2(std::numbers::pi * n); }

}  // namespace

auto asymptotic_Zk(int n, int p, int k) -> AsymptoticEstimate {
  require(n, p, k);
  const double m = exponent_m(p);
  AsymptoticEstimate e{n, p, k, 0, {}};
  e.terms = {{"2^(nk)", static_cast<double>(n) * k},
             {"k^(-m)", -m * std::log2(static_cast<double>(k))},
             {"(2^p/(pi n))^((k-1)m)", (k - 1) * m * spread_log2(n, p)}};
  for (const auto& t : e.terms) e.log2_value += t.second;
  return e;
}

auto asymptotic_Pk_log2(int n, int p, int k) -> double {
  require(n, p, k);
  const double m = exponent_m(p);
  return -m * std::log2(static_cast<double>(k)) + (k - 1) * m * spread_log2(n, p);
}

auto asymptotic_Pk(int n, int p, int k) -> double { return std::exp2(asymptotic_Pk_log2(n, p, k)); }

auto asymptotic_max_cluster(int n, int p, Level level) -> AsymptoticEstimate {
  require(n, p, 1);
  AsymptoticEstimate e{n, p, 0, 0, {}};
  e.terms = {{"2^n/n", n - std::log2(static_cast<double>(n))},
             {"(2^p/(pi n))^m", exponent_m(p) * spread_log2(n, p)}};
  if (level == Level::word) e.terms.emplace_back("n", std::log2(static_cast<double>(n)));
  for (const auto& t : e.terms) e.log2_value += t.second;
  return e;
}

auto rho(double t, int p) -> double {
  if (!(t > 0.0) || t > 1.0) throw ParameterError("rho(t) needs t in (0, 1]");
  require(1, p, 1);
  const int m = 1 << (p - 2);
  return std::pow(-std::log(t), m - 1) / std::tgamma(static_cast<double>(m));
}

auto P_theory(double t, int p) -> double {
  if (t < 0.0 || t > 1.0) throw ParameterError("P(t) needs t in [0, 1]");
  require(1, p, 1);
  if (t == 0.0) return 0.0;
  const int m = 1 << (p - 2);
  const double x = -std::log(t);
  double term = 1.0;
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    sum += term;
    term *= x / (j + 1);
  }
  return t * sum;
}

auto rho_moment(int k, int p) -> double {
  require(1, p, k);
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate([&](double t) { return t <= 0.0 ? 0.0 : rho(t, p) * std::pow(t, k - 1); }, 0.0, 1.0);
}

}  // namespace orbitcensus::asym
