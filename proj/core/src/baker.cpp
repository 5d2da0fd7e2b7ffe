#include "orbitcensus/baker.hpp"

#include <algorithm>

#include "orbitcensus/error.hpp"

namespace orbitcensus::baker {

namespace {

auto unit_interval(const Rational& r) -> bool { return sgn(r) >= 0 && r < 1; }

const Rational kHalf(1, 2);

}  // namespace

auto step(const PhasePointRational& v) -> PhasePointRational {
  if (!unit_interval(v.q) || !unit_interval(v.p)) {
    throw ParameterError("baker step needs a point of [0,1)x[0,1)");
  }
  PhasePointRational out;
  if (v.q < kHalf) {
    out.q = v.q * 2;
    out.p = v.p / 2;
  } else {
    out.q = v.q * 2 - 1;
    out.p = (v.p + 1) / 2;
  }
  out.q.canonicalize();
  out.p.canonicalize();
  return out;
}

auto orbit_points(const Necklace& x) -> PeriodicOrbit {
  const BinaryWord& w = x.representative();
  const int n = w.length();
  if (n > 62) throw CapacityError("orbit_points supports periods up to 62");
  const BigInt denom = pow2(static_cast<unsigned long>(n)) - 1;
  PeriodicOrbit orbit{x, {}, w.bits() == (std::uint64_t{1} << n) - 1};
  orbit.points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // future x_{i+1} ... x_{i+n}; past x_i x_{i-1} ... x_{i-n+1}
    std::uint64_t future = 0;
    std::uint64_t past = 0;
    for (int j = 0; j < n; ++j) {
      future = (future << 1) | static_cast<std::uint64_t>(w.at((i + j) % n));
      past = (past << 1) | static_cast<std::uint64_t>(w.at(((i - 1 - j) % n + n) % n));
    }
    Rational q(BigInt(static_cast<unsigned long>(future)), denom);
    Rational p(BigInt(static_cast<unsigned long>(past)), denom);
    q.canonicalize();
    p.canonicalize();
    orbit.points.push_back({q, p});
  }
  return orbit;
}

auto sup_distance(const PhasePointRational& a, const PhasePointRational& b) -> Rational {
  Rational dq = abs(a.q - b.q);
  Rational dp = abs(a.p - b.p);
  return dq > dp ? dq : dp;
}

auto recover_code(const PeriodicOrbit& orbit) -> BinaryWord {
  const int n = static_cast<int>(orbit.points.size());
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    bits = (bits << 1) | (orbit.points[static_cast<std::size_t>(i)].q >= kHalf ? 1u : 0u);
  }
  return {bits, n};
}

auto within_matching(const PeriodicOrbit& gx, const PeriodicOrbit& gy, const Rational& threshold)
    -> bool {
  const std::size_t n = gx.points.size();
  if (gy.points.size() != n) throw ParameterError("orbits must have equal periods");
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sup_distance(gx.points[i], gy.points[j]) <= threshold) adj[i].push_back(j);
    }
  }
  // Kuhn's augmenting paths.
  std::vector<long> match(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (auto j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match[j] < 0 || self(self, static_cast<std::size_t>(match[j]))) {
        match[j] = static_cast<long>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    seen.assign(n, 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

auto p_neighborhood_check(const PeriodicOrbit& gx, const PeriodicOrbit& gy, int p) -> bool {
  if (p < 0) throw ParameterError("p must be non-negative");
  return within_matching(gx, gy, Rational(1, pow2(static_cast<unsigned long>(p))));
}

auto symbolic_metric_sweep(int n, int p) -> SymbolicMetricReport {
  if (n < 1 || n > 16) throw CapacityError("symbolic/metric sweep supports n <= 16");
  if (p < 1 || p > n) throw ParameterError("sweep needs 1 <= p <= n");
  SymbolicMetricReport report{n, p, 0, 0, 0, {}};
  std::vector<Necklace> necklaces;
  std::vector<PeriodicOrbit> orbits;
  std::vector<EdgeCountVector> keys;
  for (const auto& x : words::all_necklaces(n)) {
    auto orbit = orbit_points(x);
    if (orbit.corner) continue;
    keys.push_back(words::cyclic_pword_counts(x.representative(), p));
    necklaces.push_back(x);
    orbits.push_back(std::move(orbit));
  }
  const Rational strict(1, pow2(static_cast<unsigned long>(p)));
  const Rational half_window(1, pow2(static_cast<unsigned long>(p / 2)));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (keys[i] != keys[j]) continue;
      ++report.close_pairs;
      if (!within_matching(orbits[i], orbits[j], strict)) {
        ++report.failures_at_2_pow_minus_p;
        if (report.first_failures.size() < 4) report.first_failures.emplace_back(necklaces[i], necklaces[j]);
      }
      if (!within_matching(orbits[i], orbits[j], half_window)) ++report.failures_at_half_window;
    }
  }
  return report;
}

}  // namespace orbitcensus::baker
