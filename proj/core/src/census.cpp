#include "orbitcensus/census.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "orbitcensus/asymptotics.hpp"
#include "orbitcensus/error.hpp"
#include "orbitcensus/graph.hpp"
#include "orbitcensus/parallel.hpp"
#include "orbitcensus/words.hpp"

namespace orbitcensus {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

auto to_string(Engine e) -> std::string { return e == Engine::brute ? "brute" : "best"; }

auto parse_engine(const std::string& text) -> Engine {
  if (text == "brute") return Engine::brute;
  if (text == "best") return Engine::best;
  throw ParameterError("unknown engine '" + text + "' (expected brute|best)");
}

auto to_string(Level l) -> std::string { return l == Level::word ? "word" : "necklace"; }

auto parse_level(const std::string& text) -> Level {
  if (text == "word") return Level::word;
  if (text == "necklace") return Level::necklace;
  throw ParameterError("unknown level '" + text + "' (expected word|necklace)");
}

CensusTable::CensusTable(int n, int p, Engine engine, std::vector<ClusterRecord> records)
    : n_(n), p_(p), engine_(engine), records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(),
            [](const ClusterRecord& a, const ClusterRecord& b) { return a.vector < b.vector; });
  for (std::size_t i = 1; i < records_.size(); ++i) {
    if (records_[i - 1].vector == records_[i].vector) {
      throw ParameterError("census records must have pairwise distinct vectors");
    }
  }
}

auto CensusTable::find(const EdgeCountVector& v) const -> const ClusterRecord* {
  auto it = std::lower_bound(records_.begin(), records_.end(), v,
                             [](const ClusterRecord& r, const EdgeCountVector& key) { return r.vector < key; });
  return it != records_.end() && it->vector == v ? &*it : nullptr;
}

auto CensusTable::total_words() const -> BigInt {
  BigInt total = 0;
  for (const auto& r : records_) total += r.size_words;
  return total;
}

auto CensusTable::has_necklace_sizes() const -> bool {
  return !records_.empty() &&
         std::all_of(records_.begin(), records_.end(), [](const auto& r) { return r.size_necklaces.has_value(); });
}

namespace census {

namespace {

struct Tally {
  std::uint64_t words = 0;
  std::uint64_t necklaces = 0;
};

// Fraction-free (Bareiss) determinant; exact for integer matrices.
template <typename T>
auto bareiss_det(std::vector<std::vector<T>> m) -> T {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T sign = 1;
  T prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return T(0);
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

auto int128_to_big(Int128 v) -> BigInt {
  const bool neg = v < 0;
  UInt128 u = neg ? static_cast<UInt128>(-v) : static_cast<UInt128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

auto is_constant_vector(const EdgeCountVector& v) -> bool {
  const std::size_t last = v.size() - 1;
  for (std::size_t a = 1; a < last; ++a) {
    if (v[a]) return false;
  }
  return (v[0] == 0) != (v[last] == 0);
}

auto pow_sizes(const CensusTable& table, unsigned k) -> std::vector<BigInt> {
  std::vector<BigInt> out;
  out.reserve(table.size());
  for (const auto& r : table.records()) out.push_back(pow(r.size_words, k));
  return out;
}

}  // namespace

auto brute_census(int n, int p, const BruteOptions& options) -> CensusTable {
  if (n < 1) throw ParameterError("n must be positive");
  if (p < 2) throw ParameterError("p must be at least 2");
  if (n > kBruteMaxN) {
    throw CapacityError("brute census scans 2^n words and supports n <= " + std::to_string(kBruteMaxN) +
                        "; use --engine best");
  }
  if (p > 12) throw CapacityError("brute census supports p <= 12");
  if (options.count_necklaces && n > kBruteNecklaceMaxN) {
    throw CapacityError("necklace-level brute census supports n <= " + std::to_string(kBruteNecklaceMaxN));
  }
  const std::size_t edges = std::size_t{1} << p;
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::unordered_map<std::string, Tally>> partial(workers);

  parallel_chunks(0, std::uint64_t{1} << n, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    auto& local = partial[w];
    std::vector<std::uint32_t> counts(edges);
    std::string key(edges, '\0');
    for (std::uint64_t v = lo; v < hi; ++v) {
      std::fill(counts.begin(), counts.end(), 0u);
      words::accumulate_cyclic_windows(v, n, p, counts);
      for (std::size_t a = 0; a < edges; ++a) key[a] = static_cast<char>(counts[a]);
      auto it = local.find(key);
      if (it == local.end()) it = local.emplace(key, Tally{}).first;
      ++it->second.words;
      if (options.count_necklaces && words::min_rotation_bits(v, n) == v &&
          (!options.prime_only || words::is_prime_orbit(BinaryWord(v, n)))) {
        ++it->second.necklaces;
      }
    }
  });

  std::map<std::string, Tally> merged;
  for (auto& local : partial) {
    for (auto& [key, t] : local) {
      auto& m = merged[key];
      m.words += t.words;
      m.necklaces += t.necklaces;
    }
  }
  std::vector<ClusterRecord> records;
  records.reserve(merged.size());
  for (const auto& [key, t] : merged) {
    std::vector<std::uint32_t> counts(edges);
    for (std::size_t a = 0; a < edges; ++a) counts[a] = static_cast<unsigned char>(key[a]);
    ClusterRecord r{EdgeCountVector(p, std::move(counts)), BigInt(static_cast<unsigned long>(t.words)),
                    std::nullopt};
    if (options.count_necklaces) r.size_necklaces = BigInt(static_cast<unsigned long>(t.necklaces));
    records.push_back(std::move(r));
  }
  CensusTable table(n, p, Engine::brute, std::move(records));
  table.set_prime_only(options.count_necklaces && options.prime_only);
  if (!options.count_necklaces) table = with_prime_necklace_sizes(std::move(table));
  return table;
}

auto best_cluster_size(const EdgeCountVector& v) -> BigInt {
  if (v.order() < 2) throw ParameterError("edge-count vector order must be at least 2");
  if (v.is_zero()) throw ParameterError("the zero vector labels no cluster");
  if (!graph::is_balanced(v)) throw ParameterError("unbalanced edge-count vector " + v.to_string());
  if (!graph::support_connected(v)) return 0;
  if (is_constant_vector(v)) return 1;

  const int p = v.order();
  const std::uint32_t V = 1u << (p - 1);
  std::vector<std::uint64_t> degree(V, 0);
  for (std::uint32_t u = 0; u < V; ++u) degree[u] = std::uint64_t{v[2 * u]} + v[2 * u + 1];
  std::vector<std::uint32_t> support;
  for (std::uint32_t u = 0; u < V; ++u) {
    if (degree[u]) support.push_back(u);
  }
  // Reduced Laplacian L = D_out - A on the support, root = first support vertex.
  const std::size_t dim = support.size() - 1;
  std::vector<std::int64_t> index(V, -1);
  for (std::size_t i = 1; i < support.size(); ++i) index[support[i]] = static_cast<std::int64_t>(i - 1);

  BigInt arborescences;
  auto fill = [&](auto& m) {
    for (std::size_t i = 1; i < support.size(); ++i) {
      const auto u = support[i];
      m[i - 1][i - 1] += static_cast<long>(degree[u]);
      for (std::uint32_t a : {2 * u, 2 * u + 1}) {
        const auto head = a & (V - 1);
        if (index[head] >= 0) m[i - 1][static_cast<std::size_t>(index[head])] -= static_cast<long>(v[a]);
      }
    }
  };
  if (p <= 4) {
    std::vector<std::vector<Int128>> m(dim, std::vector<Int128>(dim, 0));
    fill(m);
    arborescences = int128_to_big(bareiss_det(std::move(m)));
  } else {
    std::vector<std::vector<BigInt>> m(dim, std::vector<BigInt>(dim, 0));
    fill(m);
    arborescences = bareiss_det(std::move(m));
  }

  // n T prod_u (d_u - 1)! / prod_a n_a!  ==  n T prod_u binom(d_u, n_{u0}) / prod_u d_u
  BigInt num = BigInt(static_cast<unsigned long>(v.total())) * arborescences;
  BigInt den = 1;
  BigInt b;
  for (auto u : support) {
    mpz_bin_uiui(b.get_mpz_t(), degree[u], v[2 * u]);
    num *= b;
    den *= static_cast<unsigned long>(degree[u]);
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

auto best_census(int n, int p, unsigned workers) -> CensusTable {
  graph::check_enumeration_capacity(n, p);
  workers = std::max(1u, workers);
  std::vector<std::vector<ClusterRecord>> partial(workers);
  // Partition by the first free coordinate; workers interleave the (uneven) slices.
  const std::uint32_t slices = static_cast<std::uint32_t>(n) + 1;
  parallel_chunks(0, workers, workers, [&](unsigned w, std::uint64_t, std::uint64_t) {
    for (std::uint32_t s = w; s < slices; s += workers) {
      graph::enumerate_admissible_vectors(
          n, p,
          [&](const EdgeCountVector& v) {
            partial[w].push_back({v, best_cluster_size(v), std::nullopt});
            return true;
          },
          s, s + 1);
    }
  });
  std::vector<ClusterRecord> records;
  for (auto& part : partial) {
    std::move(part.begin(), part.end(), std::back_inserter(records));
  }
  return with_prime_necklace_sizes(CensusTable(n, p, Engine::best, std::move(records)));
}

auto with_prime_necklace_sizes(CensusTable table) -> CensusTable {
  const int n = table.n();
  if (!is_prime(static_cast<std::uint64_t>(n))) return table;
  std::vector<ClusterRecord> records = table.records();
  for (auto& r : records) {
    if (is_constant_vector(r.vector)) {
      r.size_necklaces = r.size_words;
      continue;
    }
    if (!mpz_divisible_ui_p(r.size_words.get_mpz_t(), static_cast<unsigned long>(n))) {
      throw ValidationError("cluster size not divisible by prime n for " + r.vector.to_string());
    }
    r.size_necklaces = BigInt(r.size_words / n);
  }
  return CensusTable(n, table.p(), table.engine(), std::move(records));
}

auto moments(const CensusTable& table, unsigned k, Level level) -> BigInt {
  if (k < 1) throw ParameterError("moment order k must be at least 1");
  BigInt z = 0;
  if (level == Level::word) {
    for (const auto& r : table.records()) z += pow(r.size_words, k);
    return z;
  }
  if (!table.has_necklace_sizes()) {
    throw StateError("necklace-level moments need necklace sizes (prime n, or a brute census with "
                     "necklace counting for n <= 24)");
  }
  for (const auto& r : table.records()) z += pow(*r.size_necklaces, k);
  return z;
}

auto necklace_total(const CensusTable& table) -> BigInt { return moments(table, 1, Level::necklace); }

auto prob_k_exact(const CensusTable& table, unsigned k) -> Rational {
  Rational r(moments(table, k, Level::necklace), pow(necklace_total(table), k));
  r.canonicalize();
  return r;
}

auto prob_k(const CensusTable& table, unsigned k) -> double { return prob_k_exact(table, k).get_d(); }

auto max_cluster(const CensusTable& table) -> const ClusterRecord& {
  if (table.records().empty()) throw StateError("empty census");
  const ClusterRecord* best = &table.records().front();
  for (const auto& r : table.records()) {
    if (r.size_words > best->size_words) best = &r;  // strict: first (smallest vector) wins ties
  }
  return *best;
}

auto empirical_distribution(const CensusTable& table, int bins) -> std::vector<DistributionSample> {
  if (bins < 1) throw ParameterError("bins must be at least 1");
  const BigInt cmax = max_cluster(table).size_words;
  std::vector<const BigInt*> sizes;
  sizes.reserve(table.size());
  for (const auto& r : table.records()) sizes.push_back(&r.size_words);
  std::sort(sizes.begin(), sizes.end(), [](const BigInt* a, const BigInt* b) { return *a < *b; });
  const BigInt total = table.total_words();

  std::vector<DistributionSample> out;
  out.reserve(static_cast<std::size_t>(bins) + 1);
  BigInt cumulative = 0;
  std::size_t next = 0;
  for (int j = 0; j <= bins; ++j) {
    const BigInt limit = cmax * j;
    while (next < sizes.size() && *sizes[next] * bins <= limit) cumulative += *sizes[next++];
    const double t = static_cast<double>(j) / bins;
    out.push_back({t, Rational(cumulative, total).get_d(), asym::P_theory(t, table.p())});
  }
  return out;
}

auto mean_edge_visits_exact(const CensusTable& table, unsigned k) -> std::vector<Rational> {
  if (k < 1) throw ParameterError("k must be at least 1");
  const auto weights = pow_sizes(table, k);
  const std::size_t edges = std::size_t{1} << table.p();
  std::vector<BigInt> num(edges, 0);
  BigInt den = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& v = table.records()[i].vector;
    for (std::size_t a = 0; a < edges; ++a) {
      if (v[a]) num[a] += weights[i] * static_cast<unsigned long>(v[a]);
    }
    den += weights[i];
  }
  std::vector<Rational> out;
  for (auto& x : num) {
    Rational r(x, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

auto mean_edge_visits(const CensusTable& table, unsigned k) -> std::vector<double> {
  std::vector<double> out;
  for (const auto& r : mean_edge_visits_exact(table, k)) out.push_back(r.get_d());
  return out;
}

auto thresholded_edge_visits_exact(const CensusTable& table, const Rational& t) -> std::vector<Rational> {
  if (sgn(t) <= 0 || t > 1) throw ParameterError("threshold t must lie in (0, 1]");
  const BigInt cmax = max_cluster(table).size_words;
  const std::size_t edges = std::size_t{1} << table.p();

  auto accumulate = [&](auto&& keep) {
    std::vector<BigInt> num(edges, 0);
    BigInt den = 0;
    for (const auto& r : table.records()) {
      if (!keep(r)) continue;
      for (std::size_t a = 0; a < edges; ++a) {
        if (r.vector[a]) num[a] += r.size_words * static_cast<unsigned long>(r.vector[a]);
      }
      den += r.size_words;
    }
    return std::pair{std::move(num), std::move(den)};
  };
  // |C| <= t |Cmax|  <=>  |C| den(t) <= num(t) |Cmax|
  const BigInt lhs_scale = t.get_den();
  const BigInt rhs = BigInt(t.get_num()) * cmax;
  auto [num, den] = accumulate([&](const ClusterRecord& r) { return r.size_words * lhs_scale <= rhs; });
  if (sgn(den) == 0) {
    BigInt smallest = table.records().front().size_words;
    for (const auto& r : table.records()) smallest = std::min(smallest, r.size_words);
    std::tie(num, den) = accumulate([&](const ClusterRecord& r) { return r.size_words == smallest; });
  }
  std::vector<Rational> out;
  for (auto& x : num) {
    Rational r(x, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

auto thresholded_edge_visits(const CensusTable& table, double t) -> std::vector<double> {
  std::vector<double> out;
  for (const auto& r : thresholded_edge_visits_exact(table, Rational(t))) out.push_back(r.get_d());
  return out;
}

auto brute_vertex_census(int n, int p) -> CensusTable {
  if (n < 1 || n > 20) throw CapacityError("vertex-keyed census supports n <= 20");
  if (p < 2 || p > 10) throw ParameterError("vertex-keyed census supports 2 <= p <= 10");
  std::map<EdgeCountVector, std::uint64_t> tally;
  const std::size_t vertices = std::size_t{1} << p;  // vertices of G_{p+1}
  words::enumerate_words(n, [&](const BinaryWord& x) {
    std::vector<std::uint32_t> visits(vertices, 0);
    for (const auto& edge : graph::word_to_path(x, p + 1)) ++visits[edge.bits >> 1];
    ++tally[EdgeCountVector(p, std::move(visits))];
    return true;
  });
  std::vector<ClusterRecord> records;
  for (const auto& [v, c] : tally) records.push_back({v, BigInt(static_cast<unsigned long>(c)), std::nullopt});
  return CensusTable(n, p, Engine::brute, std::move(records));
}

}  // namespace census
}  // namespace orbitcensus
