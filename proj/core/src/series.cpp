#include "orbitcensus/series.hpp"

#include <cmath>

#include "orbitcensus/asymptotics.hpp"
#include "orbitcensus/census.hpp"
#include "orbitcensus/error.hpp"

namespace orbitcensus::series {

auto ratio_series(int n_from, int n_to, int step, int p, const std::vector<int>& k_list, unsigned workers)
    -> std::vector<RatioRow> {
  if (step < 1 || n_from < 1 || n_to < n_from) throw ParameterError("invalid n range for the ratio series");
  for (int k : k_list) {
    if (k < 1) throw ParameterError("moment orders must be positive");
  }
  std::vector<RatioRow> rows;
  for (int n = n_from; n <= n_to; n += step) {
    const auto table = census::best_census(n, p, workers);
    for (int k : k_list) {
      RatioRow r{n, k, "moment", log2(census::moments(table, static_cast<unsigned>(k))),
                 asym::asymptotic_Zk(n, p, k).log2_value, 0};
      r.ratio = std::exp2(r.exact_log2 - r.asymptotic_log2);
      rows.push_back(r);
    }
    if (n % (1 << p) == 0) {
      RatioRow r{n, 0, "max_cluster", log2(census::max_cluster(table).size_words),
                 asym::asymptotic_max_cluster(n, p, Level::word).log2_value, 0};
      r.ratio = std::exp2(r.exact_log2 - r.asymptotic_log2);
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace orbitcensus::series
