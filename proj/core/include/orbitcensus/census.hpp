#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitcensus/bigint.hpp"
#include "orbitcensus/edge_counts.hpp"

namespace orbitcensus {

enum class Engine { brute, best };

[[nodiscard]] auto to_string(Engine e) -> std::string;
[[nodiscard]] auto parse_engine(const std::string& text) -> Engine;

enum class Level { word, necklace };

[[nodiscard]] auto to_string(Level l) -> std::string;
[[nodiscard]] auto parse_level(const std::string& text) -> Level;

/// One cluster C_n: its edge-count vector, its size over X_n and (when known) over necklaces.
struct ClusterRecord {
  EdgeCountVector vector;
  BigInt size_words;
  std::optional<BigInt> size_necklaces;
};

/// The complete partition of X_n into clusters of p-close words, sorted by vector.
class CensusTable {
 public:
  CensusTable(int n, int p, Engine engine, std::vector<ClusterRecord> records);

  [[nodiscard]] auto n() const noexcept -> int { return n_; }
  [[nodiscard]] auto p() const noexcept -> int { return p_; }
  [[nodiscard]] auto engine() const noexcept -> Engine { return engine_; }
  [[nodiscard]] auto records() const noexcept -> const std::vector<ClusterRecord>& { return records_; }
  [[nodiscard]] auto size() const noexcept -> std::size_t { return records_.size(); }

  [[nodiscard]] auto find(const EdgeCountVector& v) const -> const ClusterRecord*;

  /// Sum of word-level sizes; equals 2^n for a complete census.
  [[nodiscard]] auto total_words() const -> BigInt;

  /// True when every record carries a necklace-level size.
  [[nodiscard]] auto has_necklace_sizes() const -> bool;

  /// Tag recording whether necklace sizes count prime orbits only.
  [[nodiscard]] auto prime_only() const noexcept -> bool { return prime_only_; }
  void set_prime_only(bool v) noexcept { prime_only_ = v; }

 private:
  int n_;
  int p_;
  Engine engine_;
  bool prime_only_ = false;
  std::vector<ClusterRecord> records_;
};

struct DistributionSample {
  double t = 0;
  double empirical = 0;
  double theoretical = 0;
};

namespace census {

struct BruteOptions {
  bool count_necklaces = false;  // count necklaces per cluster directly (n <= 24)
  bool prime_only = false;       // necklace counts restricted to prime orbits
  unsigned workers = 1;
};

constexpr int kBruteMaxN = 28;
constexpr int kBruteNecklaceMaxN = 24;

/// Exhaustive scan of all 2^n words keyed by their cyclic p-window counts.
[[nodiscard]] auto brute_census(int n, int p, const BruteOptions& options = {}) -> CensusTable;

/// |C_n| by the BEST theorem: closed walks of length n realizing the edge multiplicities, with
/// a marked start and indistinguishable parallel traversals. 0 for disconnected support.
[[nodiscard]] auto best_cluster_size(const EdgeCountVector& v) -> BigInt;

/// Enumerates admissible vectors and sizes each one with best_cluster_size.
[[nodiscard]] auto best_census(int n, int p, unsigned workers = 1) -> CensusTable;

/// For prime n fills size_necklaces via |C| = n |C~| (1 for the two constant clusters).
/// Leaves the table unchanged for composite n.
[[nodiscard]] auto with_prime_necklace_sizes(CensusTable table) -> CensusTable;

/// Z_k = sum |C|^k (word level) or sum |C~|^k (necklace level).
[[nodiscard]] auto moments(const CensusTable& table, unsigned k, Level level = Level::word) -> BigInt;

/// Number of necklaces covered by the table (the necklace-level first moment).
[[nodiscard]] auto necklace_total(const CensusTable& table) -> BigInt;

/// Probability that k random necklaces fall into one cluster: Z~_k / d_n^k.
[[nodiscard]] auto prob_k(const CensusTable& table, unsigned k) -> double;
[[nodiscard]] auto prob_k_exact(const CensusTable& table, unsigned k) -> Rational;

/// Largest word-level cluster; ties go to the lexicographically smallest vector.
[[nodiscard]] auto max_cluster(const CensusTable& table) -> const ClusterRecord&;

/// Size-weighted CDF P^(t) = sum_{|C| <= t |Cmax|} |C| / 2^n at t = j / bins, j = 0..bins,
/// paired with the asymptotic P(t) of order p.
[[nodiscard]] auto empirical_distribution(const CensusTable& table, int bins)
    -> std::vector<DistributionSample>;

/// <n_a>_k = sum n_a |C|^k / sum |C|^k for every edge a, exact.
[[nodiscard]] auto mean_edge_visits_exact(const CensusTable& table, unsigned k) -> std::vector<Rational>;
[[nodiscard]] auto mean_edge_visits(const CensusTable& table, unsigned k) -> std::vector<double>;

/// n_bar_a(t): size-weighted mean of n_a over clusters with |C| <= t |Cmax|.
/// When no cluster qualifies, the clusters of minimal size are used (the t -> 0 limit).
[[nodiscard]] auto thresholded_edge_visits_exact(const CensusTable& table, const Rational& t)
    -> std::vector<Rational>;
[[nodiscard]] auto thresholded_edge_visits(const CensusTable& table, double t) -> std::vector<double>;

/// Census keyed by the vertex-visit counts of the closed walks on G_{p+1} (vertices are p-bit
/// words). Same partition as brute_census(n, p) by construction of the graphs.
[[nodiscard]] auto brute_vertex_census(int n, int p) -> CensusTable;

}  // namespace census
}  // namespace orbitcensus
