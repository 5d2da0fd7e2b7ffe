#include "orbitcensus/fourier.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "orbitcensus/error.hpp"
#include "orbitcensus/parallel.hpp"

namespace orbitcensus::fourier {

namespace {

using Matrix = std::vector<WideComplex>;  // row-major, dim x dim

auto multiply(const Matrix& a, const Matrix& b, std::size_t dim) -> Matrix {
  Matrix c(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const WideComplex aik = a[i * dim + k];
      if (aik == WideComplex{}) continue;
      for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
    }
  }
  return c;
}

auto trace_power(const Matrix& m, std::size_t dim, int n) -> WideComplex {
  Matrix acc = m;
  for (int i = 1; i < n; ++i) acc = multiply(acc, m, dim);
  WideComplex t{};
  for (std::size_t i = 0; i < dim; ++i) t += acc[i * dim + i];
  return t;
}

auto unit(long double angle) -> WideComplex { return {std::cos(angle), std::sin(angle)}; }

auto root_table(int L, long double sign) -> std::vector<WideComplex> {
  std::vector<WideComplex> r(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) r[static_cast<std::size_t>(j)] = unit(sign * 2 * std::numbers::pi_v<long double> * j / L);
  return r;
}

auto pairwise_sum(std::vector<WideComplex> v) -> WideComplex {
  if (v.empty()) return {};
  while (v.size() > 1) {
    std::size_t half = (v.size() + 1) / 2;
    for (std::size_t i = 0; i + half < v.size(); ++i) v[i] += v[i + half];
    v.resize(half);
  }
  return v[0];
}

auto ipow(std::uint64_t base, int e) -> std::uint64_t {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

auto round_certified(long double value, long double imag, long double scale_log2, const char* what) -> BigInt {
  if (scale_log2 > 62) {
    throw CapacityError(std::string(what) + ": result exceeds the exact range of the floating accumulator");
  }
  const long double nearest = std::round(value);
  const long double residual = std::max(std::abs(value - nearest), std::abs(imag));
  if (!(residual <= kRoundingTolerance)) {
    throw NumericalError(std::string(what) + ": rounding residual " + std::to_string(static_cast<double>(residual)) +
                         " exceeds 1e-6");
  }
  return BigInt(std::to_string(static_cast<unsigned long long>(nearest)));
}

void check_grid(int n, int L) {
  if (n < 1) throw ParameterError("n must be positive");
  if (L < n + 1) throw ParameterError("grid size L must be at least n + 1 for an exact inversion");
}

}  // namespace

FullTraceGrid::FullTraceGrid(int n, int L, unsigned workers) : n_(n), L_(L) {
  check_grid(n, L);
  if (static_cast<double>(L) * L * L * L > 1e8) throw CapacityError("full Fourier grid L^4 limited to 1e8 points");
  const std::size_t l = static_cast<std::size_t>(L);
  const std::size_t points = l * l * l * l;
  table_.resize(points);
  roots_ = root_table(L, -1);
  const auto plus = root_table(L, +1);
  // Q of G_2 scaled by 1/2: row a holds the edges that may follow a.
  constexpr std::array<std::array<int, 4>, 4> q{{{1, 0, 1, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}}};
  parallel_chunks(0, points, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    Matrix m(16);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::array<std::size_t, 4> digit{};
      std::uint64_t rest = idx;
      for (int a = 3; a >= 0; --a) {
        digit[static_cast<std::size_t>(a)] = rest % l;
        rest /= l;
      }
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          m[i * 4 + j] = q[i][j] ? plus[digit[j]] * 0.5L : WideComplex{};
        }
      }
      table_[idx] = trace_power(m, 4, n);
    }
  });
}

auto FullTraceGrid::raw_coefficient(const EdgeCountVector& v) const -> WideComplex {
  if (v.order() != 2) throw CapacityError("full-grid Fourier inversion supports p = 2 only");
  if (static_cast<int>(v.total()) != n_) throw ParameterError("vector total does not match the grid's n");
  const std::size_t l = static_cast<std::size_t>(L_);
  const std::array<std::size_t, 4> c{v[0] % l, v[1] % l, v[2] % l, v[3] % l};
  std::vector<WideComplex> partial;
  partial.reserve(l * l * l);
  std::size_t idx = 0;
  for (std::size_t m0 = 0; m0 < l; ++m0) {
    for (std::size_t m1 = 0; m1 < l; ++m1) {
      for (std::size_t m2 = 0; m2 < l; ++m2) {
        std::size_t phase = (c[0] * m0 + c[1] * m1 + c[2] * m2) % l;
        WideComplex s{};
        for (std::size_t m3 = 0; m3 < l; ++m3, ++idx) {
          s += table_[idx] * roots_[phase];
          phase += c[3];
          if (phase >= l) phase -= l;
        }
        partial.push_back(s);
      }
    }
  }
  const long double norm = std::ldexp(1.0L, n_) / static_cast<long double>(l * l * l * l);
  return pairwise_sum(std::move(partial)) * norm;
}

auto FullTraceGrid::cluster_size(const EdgeCountVector& v) const -> BigInt {
  const auto z = raw_coefficient(v);
  return round_certified(z.real(), z.imag(), static_cast<long double>(n_), "fourier_cluster_size");
}

auto fourier_cluster_size(const EdgeCountVector& v, int L, unsigned workers) -> BigInt {
  if (v.order() != 2) throw CapacityError("full-grid Fourier inversion supports p = 2 only");
  const int n = static_cast<int>(v.total());
  return FullTraceGrid(n, L == 0 ? n + 1 : L, workers).cluster_size(v);
}

auto fourier_moment(int n, int p, unsigned k, int L, unsigned workers) -> BigInt {
  if (p < 2 || p > 3) throw CapacityError("fourier_moment supports p in {2, 3}");
  if (k < 1) throw ParameterError("moment order k must be at least 1");
  if (L == 0) L = n + 1;
  check_grid(n, L);
  const int d = 1 << (p - 1);
  const auto l = static_cast<std::uint64_t>(L);
  const std::uint64_t points = ipow(l, d);
  const double terms = std::pow(static_cast<double>(points), static_cast<double>(k - 1));
  if (terms > kMaxMomentTerms) {
    throw CapacityError("fourier_moment would sum " + std::to_string(terms) + " terms (limit 2e8)");
  }

  // Reduced table: Lambda(phi) Q0 + Q1 at order p-1, scaled by 1/2.
  const auto plus = root_table(L, +1);
  const auto dim = static_cast<std::size_t>(d);
  std::vector<WideComplex> table(points);
  std::vector<std::vector<std::uint32_t>> digits(points, std::vector<std::uint32_t>(dim));
  parallel_chunks(0, points, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    Matrix m(dim * dim);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t a = dim; a-- > 0;) {
        digits[idx][a] = static_cast<std::uint32_t>(rest % l);
        rest /= l;
      }
      std::fill(m.begin(), m.end(), WideComplex{});
      for (std::size_t i = 0; i < dim; ++i) {
        m[i * dim + i / 2] += plus[digits[idx][i]] * 0.5L;
        m[i * dim + dim / 2 + i / 2] += 0.5L;
      }
      table[idx] = trace_power(m, dim, n);
    }
  });

  auto flat = [&](const std::vector<std::uint32_t>& dig) {
    std::uint64_t idx = 0;
    for (auto x : dig) idx = idx * l + x;
    return idx;
  };

  WideComplex total;
  if (k == 1) {
    total = table[0];
  } else {
    // Outer loop over the first free vector is split across workers; deeper levels recurse.
    std::vector<WideComplex> partial(points);
    parallel_chunks(0, points, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
      std::vector<std::uint32_t> neg(dim);
      std::vector<std::vector<std::uint32_t>> stack(k, std::vector<std::uint32_t>(dim));
      for (std::uint64_t first = lo; first < hi; ++first) {
        std::vector<WideComplex> acc;
        auto recurse = [&](auto& self, unsigned level, const std::vector<std::uint32_t>& running,
                           WideComplex product) -> void {
          if (level == k - 1) {
            for (std::size_t a = 0; a < dim; ++a) neg[a] = running[a] == 0 ? 0 : static_cast<std::uint32_t>(l - running[a]);
            acc.push_back(product * table[flat(neg)]);
            return;
          }
          auto& next = stack[level];
          for (std::uint64_t m = 0; m < points; ++m) {
            for (std::size_t a = 0; a < dim; ++a) {
              next[a] = static_cast<std::uint32_t>((running[a] + digits[m][a]) % l);
            }
            self(self, level + 1, next, product * table[m]);
          }
        };
        recurse(recurse, 1, digits[first], table[first]);
        partial[first] = pairwise_sum(std::move(acc));
      }
    });
    total = pairwise_sum(std::move(partial));
  }
  const long double scale = std::ldexp(1.0L, static_cast<int>(n * k)) /
                            std::pow(static_cast<long double>(points), static_cast<long double>(k - 1));
  total *= scale;
  return round_certified(total.real(), total.imag(), static_cast<long double>(n) * k, "fourier_moment");
}

}  // namespace orbitcensus::fourier
