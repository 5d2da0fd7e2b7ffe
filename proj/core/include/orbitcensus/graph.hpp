#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orbitcensus/bigint.hpp"
#include "orbitcensus/edge_counts.hpp"
#include "orbitcensus/words.hpp"

namespace orbitcensus {

/// The binary de Bruijn graph G_p: vertices are (p-1)-bit words, edges are p-bit words.
///
/// Edge a = [a_1 ... a_p] runs from tail [a_1 ... a_{p-1}] to head [a_2 ... a_p]; edge a can be
/// followed by edge b iff head(a) == tail(b).
class DeBruijnGraph {
 public:
  explicit DeBruijnGraph(int p);

  [[nodiscard]] auto order() const noexcept -> int { return p_; }
  [[nodiscard]] auto vertex_count() const noexcept -> std::uint32_t { return 1u << (p_ - 1); }
  [[nodiscard]] auto edge_count() const noexcept -> std::uint32_t { return 1u << p_; }

  [[nodiscard]] auto tail(std::uint32_t a) const noexcept -> std::uint32_t { return a >> 1; }
  [[nodiscard]] auto head(std::uint32_t a) const noexcept -> std::uint32_t {
    return a & (vertex_count() - 1);
  }
  [[nodiscard]] auto follows(std::uint32_t a, std::uint32_t b) const noexcept -> bool {
    return head(a) == tail(b);
  }
  [[nodiscard]] auto out_edges(std::uint32_t u) const noexcept -> std::array<std::uint32_t, 2> {
    return {2 * u, 2 * u + 1};
  }
  [[nodiscard]] auto in_edges(std::uint32_t u) const noexcept -> std::array<std::uint32_t, 2> {
    return {u, u + vertex_count()};
  }

 private:
  int p_;
};

namespace graph {

[[nodiscard]] auto build_debruijn(int p) -> DeBruijnGraph;

/// The n cyclic p-windows of x in order; consecutive edges (with wrap-around) follow each other.
[[nodiscard]] auto word_to_path(const BinaryWord& x, int p) -> std::vector<PWord>;

/// Kirchhoff balance at every vertex: flow in equals flow out.
[[nodiscard]] auto is_balanced(const EdgeCountVector& v) -> bool;

/// The edges with n_a > 0 form one connected sub-digraph. Throws on the zero vector.
[[nodiscard]] auto support_connected(const EdgeCountVector& v) -> bool;

/// Balanced with connected support, i.e. realized by at least one closed walk.
[[nodiscard]] auto is_realizable(const EdgeCountVector& v) -> bool;

/// Rank of the vertex balance system for G_p, computed by exact elimination.
[[nodiscard]] auto balance_rank(int p) -> int;

/// Capacity of the admissible-vector enumerator; throws CapacityError outside it.
void check_enumeration_capacity(int n, int p);

/// Streams every realizable vector with total n, lexicographic in the free coordinates
/// (n_a for a < 2^(p-1)). `sink` may return false to stop.
///
/// `first_lo`/`first_hi` restrict the first free coordinate to [first_lo, first_hi) so that the
/// stream can be partitioned across workers.
void enumerate_admissible_vectors(int n, int p, const std::function<bool(const EdgeCountVector&)>& sink,
                                  std::uint32_t first_lo = 0,
                                  std::uint32_t first_hi = UINT32_MAX);

[[nodiscard]] auto admissible_vectors(int n, int p) -> std::vector<EdgeCountVector>;

struct AdmissibleCount {
  BigInt count;                      // exact number of non-empty clusters
  std::optional<double> leading;     // w_p n^(2^(p-1)) where w_p is known (p = 2: 1/4)
  std::optional<double> ratio;       // count / leading
};

[[nodiscard]] auto count_admissible(int n, int p) -> AdmissibleCount;

}  // namespace graph
}  // namespace orbitcensus
