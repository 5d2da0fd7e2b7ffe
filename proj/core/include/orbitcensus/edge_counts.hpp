#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace orbitcensus {

/// Number of traversals of every edge of the de Bruijn graph G_p by a closed walk.
///
/// `counts[a]` belongs to the p-bit word a = [a_1 ... a_p] read with a_1 as the most significant
/// bit, so the vector is stored in ascending PWord order.
class EdgeCountVector {
 public:
  EdgeCountVector() = default;
  EdgeCountVector(int order, std::vector<std::uint32_t> counts);

  /// The all-zero vector of the given order.
  static auto zeros(int order) -> EdgeCountVector;

  /// Parses the colon-joined form produced by to_string(); the order is inferred from the length.
  static auto parse(const std::string& text) -> EdgeCountVector;

  [[nodiscard]] auto order() const noexcept -> int { return order_; }
  [[nodiscard]] auto size() const noexcept -> std::size_t { return counts_.size(); }
  [[nodiscard]] auto counts() const noexcept -> const std::vector<std::uint32_t>& { return counts_; }
  [[nodiscard]] auto operator[](std::size_t a) const -> std::uint32_t { return counts_[a]; }
  auto operator[](std::size_t a) -> std::uint32_t& { return counts_[a]; }

  /// n = sum of all entries.
  [[nodiscard]] auto total() const -> std::uint64_t;
  [[nodiscard]] auto is_zero() const -> bool;

  /// Colon-joined counts, e.g. "2:2:2:1".
  [[nodiscard]] auto to_string() const -> std::string;

  auto operator<=>(const EdgeCountVector&) const = default;
  auto operator==(const EdgeCountVector&) const -> bool = default;

 private:
  int order_ = 0;
  std::vector<std::uint32_t> counts_;
};

struct EdgeCountVectorHash {
  auto operator()(const EdgeCountVector& v) const noexcept -> std::size_t;
};

}  // namespace orbitcensus
