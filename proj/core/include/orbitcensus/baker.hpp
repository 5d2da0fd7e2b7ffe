#pragma once

#include <vector>

#include "orbitcensus/bigint.hpp"
#include "orbitcensus/words.hpp"

namespace orbitcensus {

/// A point (q, p) of the unit square with exact rational coordinates.
struct PhasePointRational {
  Rational q;
  Rational p;

  auto operator==(const PhasePointRational& o) const -> bool { return q == o.q && p == o.p; }
};

/// The n points of the periodic orbit coded by a necklace, in time order.
///
/// The all-ones code has q = p = 1, which is the corner of the square rather than a point of
/// [0,1)^2. Such orbits carry `corner = true`; their points are stored as (1, 1).
struct PeriodicOrbit {
  Necklace code;
  std::vector<PhasePointRational> points;
  bool corner = false;
};

namespace baker {

/// One step of the baker's map: (2q, p/2) on q < 1/2, (2q - 1, (1 + p)/2) on q >= 1/2.
[[nodiscard]] auto step(const PhasePointRational& v) -> PhasePointRational;

/// Point i has q = 0.(x_{i+1} x_{i+2} ...) and p = 0.(x_i x_{i-1} ...), read cyclically.
[[nodiscard]] auto orbit_points(const Necklace& x) -> PeriodicOrbit;

/// max(|q - q'|, |p - p'|).
[[nodiscard]] auto sup_distance(const PhasePointRational& a, const PhasePointRational& b) -> Rational;

/// Symbol sequence read back through the partition x_i = [q_{i-1} >= 1/2].
[[nodiscard]] auto recover_code(const PeriodicOrbit& orbit) -> BinaryWord;

/// True iff there is a bijection between the point sets with every pair within `threshold`.
[[nodiscard]] auto within_matching(const PeriodicOrbit& gx, const PeriodicOrbit& gy,
                                   const Rational& threshold) -> bool;

/// within_matching at threshold 2^-p.
[[nodiscard]] auto p_neighborhood_check(const PeriodicOrbit& gx, const PeriodicOrbit& gy, int p)
    -> bool;

struct SymbolicMetricReport {
  int n = 0;
  int p = 0;
  long close_pairs = 0;       // unordered pairs of distinct non-corner necklaces with x ~p y
  long failures_at_2_pow_minus_p = 0;
  long failures_at_half_window = 0;  // threshold 2^-floor(p/2)
  std::vector<std::pair<Necklace, Necklace>> first_failures;  // up to a handful, for reporting
};

/// Exhaustively tests the symbolic => metric implication for all necklace pairs of length n.
[[nodiscard]] auto symbolic_metric_sweep(int n, int p) -> SymbolicMetricReport;

}  // namespace baker
}  // namespace orbitcensus
