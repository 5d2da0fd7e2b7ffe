#include "orbitcensus/graph.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "orbitcensus/error.hpp"

namespace orbitcensus {

DeBruijnGraph::DeBruijnGraph(int p) : p_(p) {
  if (p < 2 || p > 20) throw ParameterError("de Bruijn order must be in [2, 20]");
}

namespace graph {

namespace {

void require_graph_order(const EdgeCountVector& v) {
  if (v.order() < 2) throw ParameterError("edge-count vector order must be at least 2");
}

// Rank of a dense rational matrix by Gaussian elimination.
auto rational_rank(std::vector<std::vector<Rational>> m) -> int {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Dependent coordinates n_{V+u} (u < V) as integer affine functions of the free coordinates
// n_0 .. n_{V-1} and the total n: n_{V+u} = sum_v coeff[u][v] * n_v + coeff[u][V] * n.
struct DependentSolver {
  int p = 0;
  std::vector<std::vector<std::int64_t>> coeff;
};

auto build_solver(int p) -> DependentSolver {
  const std::size_t V = std::size_t{1} << (p - 1);
  // Unknowns y_u; equations: one per vertex plus the length constraint.
  // Each row: [A (V columns) | B (V + 1 columns: x_0..x_{V-1}, n)].
  std::vector<std::vector<Rational>> rows;
  for (std::size_t u = 0; u < V; ++u) {
    std::vector<Rational> row(2 * V + 1, 0);
    // out(u) = n_{2u} + n_{2u+1};  in(u) = x_u + y_u  =>  y_u - [dependents of out] = [free of out] - x_u
    row[u] += 1;
    for (std::size_t a : {2 * u, 2 * u + 1}) {
      if (a >= V) row[a - V] -= 1;
      else row[V + a] += 1;
    }
    row[V + u] -= 1;
    rows.push_back(std::move(row));
  }
  {
    std::vector<Rational> row(2 * V + 1, 0);
    for (std::size_t u = 0; u < V; ++u) {
      row[u] = 1;
      row[V + u] = -1;
    }
    row[2 * V] = 1;
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan on the A block.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < V; ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) throw ValidationError("balance system is singular in the dependent block");
    std::swap(rows[piv], rows[rank]);
    const Rational lead = rows[rank][c];
    for (auto& e : rows[rank]) e /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  DependentSolver s{p, std::vector<std::vector<std::int64_t>>(V, std::vector<std::int64_t>(V + 1))};
  for (std::size_t u = 0; u < V; ++u) {
    for (std::size_t k = 0; k <= V; ++k) {
      const Rational& e = rows[u][V + k];
      if (e.get_den() != 1) throw ValidationError("balance solution has non-integer coefficients");
      s.coeff[u][k] = e.get_num().get_si();
    }
  }
  // The redundant row must have vanished.
  for (std::size_t k = 0; k < rows[V].size(); ++k) {
    if (sgn(rows[V][k]) != 0) throw ValidationError("balance system is inconsistent");
  }
  return s;
}

auto solver_for(int p) -> const DependentSolver& {
  static std::mutex mu;
  static std::map<int, DependentSolver> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_solver(p)).first;
  return it->second;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  auto find(std::uint32_t x) -> std::uint32_t {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

auto connected_support_unchecked(const std::vector<std::uint32_t>& counts, int p) -> bool {
  const std::uint32_t V = 1u << (p - 1);
  UnionFind uf(V);
  std::int64_t first = -1;
  for (std::uint32_t a = 0; a < counts.size(); ++a) {
    if (!counts[a]) continue;
    uf.unite(a >> 1, a & (V - 1));
    if (first < 0) first = a >> 1;
  }
  if (first < 0) return false;
  const auto root = uf.find(static_cast<std::uint32_t>(first));
  for (std::uint32_t a = 0; a < counts.size(); ++a) {
    if (counts[a] && uf.find(a >> 1) != root) return false;
  }
  return true;
}

}  // namespace

auto build_debruijn(int p) -> DeBruijnGraph { return DeBruijnGraph(p); }

auto word_to_path(const BinaryWord& x, int p) -> std::vector<PWord> {
  if (p < 1 || p > 24) throw ParameterError("window length must be in [1, 24]");
  const int n = x.length();
  std::vector<PWord> path;
  path.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint32_t w = 0;
    for (int j = 0; j < p; ++j) w = (w << 1) | static_cast<std::uint32_t>(x.at((i + j) % n));
    path.push_back({p, w});
  }
  return path;
}

auto is_balanced(const EdgeCountVector& v) -> bool {
  require_graph_order(v);
  const DeBruijnGraph g(v.order());
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    const auto [o0, o1] = g.out_edges(u);
    const auto [i0, i1] = g.in_edges(u);
    if (std::uint64_t{v[o0]} + v[o1] != std::uint64_t{v[i0]} + v[i1]) return false;
  }
  return true;
}

auto support_connected(const EdgeCountVector& v) -> bool {
  require_graph_order(v);
  if (v.is_zero()) throw ParameterError("support_connected is undefined for the zero vector");
  // For a balanced vector weak connectivity of the support is strong connectivity.
  return connected_support_unchecked(v.counts(), v.order());
}

auto is_realizable(const EdgeCountVector& v) -> bool {
  return !v.is_zero() && is_balanced(v) && support_connected(v);
}

auto balance_rank(int p) -> int {
  const DeBruijnGraph g(p);
  std::vector<std::vector<Rational>> m(g.vertex_count(), std::vector<Rational>(g.edge_count(), 0));
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (auto a : g.out_edges(u)) m[u][a] += 1;
    for (auto a : g.in_edges(u)) m[u][a] -= 1;
  }
  return rational_rank(std::move(m));
}

void check_enumeration_capacity(int n, int p) {
  if (n < 1) throw ParameterError("n must be positive");
  if (p < 2) throw ParameterError("p must be at least 2");
  const bool ok = (p <= 3 && n <= 200) || (p == 4 && n <= 40);
  if (!ok) {
    throw CapacityError("admissible-vector enumeration supports p <= 3 with n <= 200 and p = 4 with "
                        "n <= 40 (got n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                        "); use the brute engine for small n");
  }
}

void enumerate_admissible_vectors(int n, int p, const std::function<bool(const EdgeCountVector&)>& sink,
                                  std::uint32_t first_lo, std::uint32_t first_hi) {
  check_enumeration_capacity(n, p);
  const auto& solver = solver_for(p);
  const std::size_t V = std::size_t{1} << (p - 1);
  std::vector<std::uint32_t> counts(2 * V, 0);
  std::vector<std::int64_t> free(V, 0);
  bool stop = false;

  auto leaf = [&]() {
    for (std::size_t u = 0; u < V; ++u) {
      std::int64_t y = solver.coeff[u][V] * n;
      for (std::size_t v = 0; v < V; ++v) y += solver.coeff[u][v] * free[v];
      if (y < 0) return;
      counts[V + u] = static_cast<std::uint32_t>(y);
    }
    for (std::size_t v = 0; v < V; ++v) counts[v] = static_cast<std::uint32_t>(free[v]);
    if (!connected_support_unchecked(counts, p)) return;
    if (!sink(EdgeCountVector(p, counts))) stop = true;
  };
  auto recurse = [&](auto&& self, std::size_t idx, std::int64_t budget) -> void {
    if (stop) return;
    if (idx == V) {
      leaf();
      return;
    }
    std::int64_t lo = 0;
    std::int64_t hi = budget;
    if (idx == 0) {
      lo = first_lo;
      hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(first_hi) - 1);
    }
    for (std::int64_t c = lo; c <= hi && !stop; ++c) {
      free[idx] = c;
      self(self, idx + 1, budget - c);
    }
  };
  recurse(recurse, 0, n);
}

auto admissible_vectors(int n, int p) -> std::vector<EdgeCountVector> {
  std::vector<EdgeCountVector> out;
  enumerate_admissible_vectors(n, p, [&](const EdgeCountVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

auto count_admissible(int n, int p) -> AdmissibleCount {
  std::uint64_t count = 0;
  enumerate_admissible_vectors(n, p, [&](const EdgeCountVector&) {
    ++count;
    return true;
  });
  AdmissibleCount out{BigInt(static_cast<unsigned long>(count)), std::nullopt, std::nullopt};
  if (p == 2) {
    out.leading = static_cast<double>(n) * n / 4.0;
    out.ratio = static_cast<double>(count) / *out.leading;
  }
  return out;
}

}  // namespace graph
}  // namespace orbitcensus
