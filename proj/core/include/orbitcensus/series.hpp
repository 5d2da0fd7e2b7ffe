#pragma once

#include <string>
#include <vector>

namespace orbitcensus::series {

struct RatioRow {
  int n = 0;
  int k = 0;                  // moment order; 0 marks a largest-cluster row
  std::string kind;           // "moment" or "max_cluster"
  double exact_log2 = 0;
  double asymptotic_log2 = 0;
  double ratio = 0;           // exact / asymptotic
};

/// Exact moments Z_k against their closed form for n = n_from, n_from + step, ..., n_to, plus a
/// largest-cluster row (word level) whenever n is a multiple of 2^p. Censuses come from the
/// enumerating engine.
[[nodiscard]] auto ratio_series(int n_from, int n_to, int step, int p, const std::vector<int>& k_list,
                                unsigned workers = 1) -> std::vector<RatioRow>;

}  // namespace orbitcensus::series
