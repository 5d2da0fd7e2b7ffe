#include "orbitcensus/words.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "orbitcensus/error.hpp"

namespace orbitcensus {

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

namespace {

constexpr auto low_mask(int n) -> std::uint64_t {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Left rotation of an n-bit pattern by i positions (x_1 moves to the back).
constexpr auto rotl_n(std::uint64_t bits, int n, int i) -> std::uint64_t {
  i %= n;
  if (i == 0) return bits;
  return ((bits << i) | (bits >> (n - i))) & low_mask(n);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// EdgeCountVector

EdgeCountVector::EdgeCountVector(int order, std::vector<std::uint32_t> counts)
    : order_(order), counts_(std::move(counts)) {
  if (order < 1 || order > 24 || counts_.size() != (std::size_t{1} << order)) {
    throw ParameterError("edge-count vector of order " + std::to_string(order) + " needs 2^" +
                         std::to_string(order) + " entries");
  }
}

auto EdgeCountVector::zeros(int order) -> EdgeCountVector {
  if (order < 1 || order > 24) throw ParameterError("edge-count order out of range");
  return {order, std::vector<std::uint32_t>(std::size_t{1} << order, 0)};
}

auto EdgeCountVector::parse(const std::string& text) -> EdgeCountVector {
  std::vector<std::uint32_t> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(':', pos), text.size());
    const auto field = text.substr(pos, next - pos);
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
      throw ParameterError("malformed edge-count vector '" + text + "'");
    }
    counts.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    pos = next + 1;
  }
  if (!std::has_single_bit(counts.size()) || counts.size() < 2) {
    throw ParameterError("edge-count vector length must be a power of two: '" + text + "'");
  }
  return {std::countr_zero(counts.size()), std::move(counts)};
}

auto EdgeCountVector::total() const -> std::uint64_t {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

auto EdgeCountVector::is_zero() const -> bool {
  return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
}

auto EdgeCountVector::to_string() const -> std::string {
  std::string s;
  for (std::size_t a = 0; a < counts_.size(); ++a) {
    if (a) s += ':';
    s += std::to_string(counts_[a]);
  }
  return s;
}

auto EdgeCountVectorHash::operator()(const EdgeCountVector& v) const noexcept -> std::size_t {
  std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(v.order());
  for (auto c : v.counts()) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------------------------
// BinaryWord / Necklace / PWord

BinaryWord::BinaryWord(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 1 || length > kMaxLength) {
    throw ParameterError("word length must be in [1, 64], got " + std::to_string(length));
  }
  if ((bits & ~low_mask(length)) != 0) {
    throw ParameterError("bit pattern wider than the word length");
  }
}

auto BinaryWord::parse(std::string_view text) -> BinaryWord {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty() || text.size() > kMaxLength) throw ParameterError("word length out of range");
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw ParameterError("words are strings over {0,1}");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return {bits, static_cast<int>(text.size())};
}

auto BinaryWord::at(int i) const -> int {
  if (i < 0 || i >= length_) throw ParameterError("symbol index out of range");
  return static_cast<int>((bits_ >> (length_ - 1 - i)) & 1u);
}

auto BinaryWord::rotated(int i) const -> BinaryWord {
  i = ((i % length_) + length_) % length_;
  return {rotl_n(bits_, length_, i), length_};
}

auto BinaryWord::ones() const -> int { return std::popcount(bits_); }

auto BinaryWord::to_string() const -> std::string {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) s[static_cast<std::size_t>(i)] = at(i) ? '1' : '0';
  return s;
}

Necklace::Necklace(const BinaryWord& any_rotation)
    : rep_(words::min_rotation_bits(any_rotation.bits(), any_rotation.length()),
           any_rotation.length()) {}

auto PWord::to_string() const -> std::string { return BinaryWord(bits, order).to_string(); }

namespace words {

auto min_rotation_bits(std::uint64_t bits, int n) -> std::uint64_t {
  std::uint64_t best = bits;
  for (int i = 1; i < n; ++i) best = std::min(best, rotl_n(bits, n, i));
  return best;
}

void accumulate_cyclic_windows(std::uint64_t bits, int n, int p, std::span<std::uint32_t> out) {
  const std::uint64_t wmask = low_mask(p);
  if (2 * n <= 64 && p <= n) {
    // Doubled pattern: window i is bits [2n-i-p, 2n-i) of x x.
    const std::uint64_t doubled = (bits << n) | bits;
    for (int i = 0; i < n; ++i) ++out[(doubled >> (2 * n - i - p)) & wmask];
    return;
  }
  for (int i = 0; i < n; ++i) {
    std::uint64_t w = 0;
    for (int j = 0; j < p; ++j) {
      const int pos = (i + j) % n;
      w = (w << 1) | ((bits >> (n - 1 - pos)) & 1u);
    }
    ++out[w];
  }
}

auto cyclic_pword_counts(const BinaryWord& x, int p) -> EdgeCountVector {
  if (p < 1 || p > x.length()) {
    throw ParameterError("window length p=" + std::to_string(p) + " outside [1, " +
                         std::to_string(x.length()) + "]");
  }
  if (p > 24) throw ParameterError("window length above 24 is not supported");
  std::vector<std::uint32_t> counts(std::size_t{1} << p, 0);
  accumulate_cyclic_windows(x.bits(), x.length(), p, counts);
  return {p, std::move(counts)};
}

auto p_close(const BinaryWord& x, const BinaryWord& y, int p) -> bool {
  if (x.length() != y.length()) throw ParameterError("p_close needs words of equal length");
  return cyclic_pword_counts(x, p) == cyclic_pword_counts(y, p);
}

auto ultrametric_distance(const Necklace& x, const Necklace& y) -> int {
  const int n = x.length();
  if (y.length() != n) throw ParameterError("distance needs necklaces of equal length");
  if (x == y) return 0;
  // Closeness is monotone in p, so the first failure ends the scan.
  int deepest = 0;
  for (int p = 1; p <= std::min(n, 24); ++p) {
    if (!p_close(x.representative(), y.representative(), p)) break;
    deepest = p;
  }
  return n - deepest;
}

auto canonical_rotation(const BinaryWord& x) -> Necklace { return Necklace(x); }

auto is_prime_orbit(const BinaryWord& x) -> bool {
  const int n = x.length();
  for (int r = 1; r < n; ++r) {
    if (n % r == 0 && x.rotated(r) == x) return false;
  }
  return true;
}

auto necklace_count(int n) -> std::uint64_t {
  if (n < 1 || n > 63) throw ParameterError("necklace_count supports 1 <= n <= 63");
  // (1/n) sum_{d | n} phi(d) 2^(n/d)
  auto phi = [](int m) {
    int r = m;
    for (int q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        while (m % q == 0) m /= q;
        r -= r / q;
      }
    }
    if (m > 1) r -= r / m;
    return r;
  };
  UInt128 sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) sum += static_cast<UInt128>(phi(d)) << (n / d);
  }
  return static_cast<std::uint64_t>(sum / static_cast<unsigned>(n));
}

void enumerate_words(int n, const std::function<bool(const BinaryWord&)>& sink) {
  if (n < 1 || n > 40) throw CapacityError("exhaustive word enumeration supports 1 <= n <= 40");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (!sink(BinaryWord(v, n))) return;
  }
}

void enumerate_necklaces(int n, const std::function<bool(const Necklace&)>& sink) {
  if (n < 1 || n > 40) throw CapacityError("exhaustive necklace enumeration supports 1 <= n <= 40");
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < end; ++v) {
    if (min_rotation_bits(v, n) == v && !sink(Necklace(BinaryWord(v, n)))) return;
  }
}

auto all_necklaces(int n, bool prime_only) -> std::vector<Necklace> {
  std::vector<Necklace> out;
  enumerate_necklaces(n, [&](const Necklace& x) {
    if (!prime_only || is_prime_orbit(x.representative())) out.push_back(x);
    return true;
  });
  return out;
}

auto cluster_tree(std::span<const Necklace> necklaces, int p_max) -> std::vector<ClusterTreeLevel> {
  if (necklaces.empty()) return {};
  const int n = necklaces.front().length();
  if (p_max < 1 || p_max > n) throw ParameterError("cluster_tree needs 1 <= p_max <= n");
  for (const auto& x : necklaces) {
    if (x.length() != n) throw ParameterError("cluster_tree needs necklaces of one length");
  }
  std::vector<ClusterTreeLevel> levels;
  for (int p = 1; p <= p_max; ++p) {
    std::map<EdgeCountVector, std::vector<Necklace>> groups;
    for (const auto& x : necklaces) groups[cyclic_pword_counts(x.representative(), p)].push_back(x);
    ClusterTreeLevel level{p, {}};
    for (auto& [key, members] : groups) {
      std::sort(members.begin(), members.end());
      level.classes.push_back(std::move(members));
    }
    std::sort(level.classes.begin(), level.classes.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

auto cluster_tree(int n, int p_max, bool prime_only) -> std::vector<ClusterTreeLevel> {
  const auto necklaces = all_necklaces(n, prime_only);
  return cluster_tree(std::span<const Necklace>(necklaces), p_max);
}

}  // namespace words
}  // namespace orbitcensus
