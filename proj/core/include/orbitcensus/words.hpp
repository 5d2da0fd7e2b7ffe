#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcensus/edge_counts.hpp"

namespace orbitcensus {

/// A binary word x = x_1 x_2 ... x_n, packed with x_1 as the most significant of the n low bits.
///
/// Under this packing, ascending integer order is lexicographic order on words of equal length.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 64;

  BinaryWord(std::uint64_t bits, int length);

  /// Parses a string of '0'/'1' characters, optionally wrapped in brackets: "[1101000]".
  static auto parse(std::string_view text) -> BinaryWord;

  [[nodiscard]] auto length() const noexcept -> int { return length_; }
  [[nodiscard]] auto bits() const noexcept -> std::uint64_t { return bits_; }

  /// Symbol x_{i+1} (0-based position i).
  [[nodiscard]] auto at(int i) const -> int;

  /// x_{i+1} ... x_n x_1 ... x_i, i.e. the word read from position i with glued ends.
  [[nodiscard]] auto rotated(int i) const -> BinaryWord;

  [[nodiscard]] auto ones() const -> int;
  [[nodiscard]] auto to_string() const -> std::string;

  auto operator<=>(const BinaryWord&) const = default;
  auto operator==(const BinaryWord&) const -> bool = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 1;
};

/// An element of the quotient of X_n by cyclic shift, held by its lexicographically minimal rotation.
class Necklace {
 public:
  explicit Necklace(const BinaryWord& any_rotation);

  [[nodiscard]] auto representative() const noexcept -> const BinaryWord& { return rep_; }
  [[nodiscard]] auto length() const noexcept -> int { return rep_.length(); }
  [[nodiscard]] auto to_string() const -> std::string { return rep_.to_string(); }

  auto operator<=>(const Necklace&) const = default;
  auto operator==(const Necklace&) const -> bool = default;

 private:
  BinaryWord rep_;
};

/// A p-bit word a = [a_1 ... a_p], a_1 most significant.
struct PWord {
  int order = 2;
  std::uint32_t bits = 0;

  [[nodiscard]] auto to_string() const -> std::string;
  auto operator<=>(const PWord&) const = default;
};

/// One level of the p-closeness hierarchy: the necklaces split into classes of p-close words.
struct ClusterTreeLevel {
  int level = 0;
  std::vector<std::vector<Necklace>> classes;
};

namespace words {

// Minimal rotation of a packed n-bit pattern (n <= 64).
[[nodiscard]] auto min_rotation_bits(std::uint64_t bits, int n) -> std::uint64_t;

/// Counts of the n cyclic windows of length p in x. Requires 1 <= p <= length(x).
[[nodiscard]] auto cyclic_pword_counts(const BinaryWord& x, int p) -> EdgeCountVector;

/// Same as above on a packed pattern without validation; `out` must hold 2^p zeros.
void accumulate_cyclic_windows(std::uint64_t bits, int n, int p, std::span<std::uint32_t> out);

/// x and y contain every cyclic p-window the same number of times.
[[nodiscard]] auto p_close(const BinaryWord& x, const BinaryWord& y, int p) -> bool;

/// d(x, y) = n - max{p : x ~p y}, with d(x, x) = 0 and d = n when x, y are not even 1-close.
[[nodiscard]] auto ultrametric_distance(const Necklace& x, const Necklace& y) -> int;

[[nodiscard]] auto canonical_rotation(const BinaryWord& x) -> Necklace;

/// True iff the minimal period of the cyclic word equals its length.
[[nodiscard]] auto is_prime_orbit(const BinaryWord& x) -> bool;

/// Number of necklaces of length n (Burnside / Moreau count), exact.
[[nodiscard]] auto necklace_count(int n) -> std::uint64_t;

/// Calls `sink` on all 2^n words in ascending order; `sink` may return false to stop early.
void enumerate_words(int n, const std::function<bool(const BinaryWord&)>& sink);

/// Calls `sink` on every necklace of length n in ascending order of its representative.
void enumerate_necklaces(int n, const std::function<bool(const Necklace&)>& sink);

[[nodiscard]] auto all_necklaces(int n, bool prime_only = false) -> std::vector<Necklace>;

/// Levels 1..p_max of the p-closeness hierarchy over all necklaces of length n.
[[nodiscard]] auto cluster_tree(int n, int p_max, bool prime_only = false)
    -> std::vector<ClusterTreeLevel>;

/// Levels 1..p_max restricted to the given set of necklaces (all of one length).
[[nodiscard]] auto cluster_tree(std::span<const Necklace> necklaces, int p_max)
    -> std::vector<ClusterTreeLevel>;

}  // namespace words
}  // namespace orbitcensus
