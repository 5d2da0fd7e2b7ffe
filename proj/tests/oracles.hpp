// Slow, obviously-correct reference implementations used only by the tests.
// They work on std::string words and never call into the library's fast paths.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Counts = std::vector<int>;

inline auto word_string(std::uint64_t bits, int n) -> std::string {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline auto all_words(int n) -> std::vector<std::string> {
  std::vector<std::string> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(word_string(b, n));
  return out;
}

// Cyclic window counts, window index read as a binary number with its first letter high.
inline auto window_counts(const std::string& w, int p) -> Counts {
  Counts c(std::size_t{1} << p, 0);
  std::string doubled = w;
  while (doubled.size() < w.size() + static_cast<std::size_t>(p)) doubled += w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++c[static_cast<std::size_t>(std::stoul(doubled.substr(i, static_cast<std::size_t>(p)), nullptr, 2))];
  }
  return c;
}

inline auto min_rotation(const std::string& w) -> std::string {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

inline auto is_primitive(const std::string& w) -> bool {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d == 0 && w.substr(d) + w.substr(0, d) == w) return false;
  }
  return true;
}

inline auto necklaces(int n) -> std::set<std::string> {
  std::set<std::string> out;
  for (const auto& w : all_words(n)) out.insert(min_rotation(w));
  return out;
}

struct Cluster {
  long long words = 0;
  long long necklaces = 0;
};

// Census by listing every word.
inline auto census(int n, int p) -> std::map<Counts, Cluster> {
  std::map<Counts, Cluster> out;
  for (const auto& w : all_words(n)) {
    auto& c = out[window_counts(w, p)];
    ++c.words;
    if (min_rotation(w) == w) ++c.necklaces;
  }
  return out;
}

// |C| by depth-first construction of words whose windows consume the given counts exactly.
inline auto cluster_size_by_search(const Counts& target, int p) -> long long {
  int n = 0;
  for (int x : target) n += x;
  const std::uint32_t mask = (1u << p) - 1;
  long long found = 0;
  Counts left = target;
  std::string w;
  auto rec = [&](auto& self) -> void {
    const int len = static_cast<int>(w.size());
    if (len == n) {
      // close the cycle: the p - 1 windows that wrap around
      Counts rest = left;
      for (int i = n - p + 1; i < n; ++i) {
        std::uint32_t idx = 0;
        for (int j = 0; j < p; ++j) {
          idx = (idx << 1) | static_cast<std::uint32_t>(w[static_cast<std::size_t>((i + j) % n)] - '0');
        }
        if (--rest[idx] < 0) return;
      }
      if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) ++found;
      return;
    }
    for (char c : {'0', '1'}) {
      w.push_back(c);
      bool ok = true;
      std::uint32_t idx = 0;
      if (static_cast<int>(w.size()) >= p) {
        for (std::size_t j = w.size() - static_cast<std::size_t>(p); j < w.size(); ++j) idx = ((idx << 1) | static_cast<std::uint32_t>(w[j] - '0')) & mask;
        ok = --left[idx] >= 0;
      }
      if (ok) self(self);
      if (static_cast<int>(w.size()) >= p) ++left[idx];
      w.pop_back();
    }
  };
  if (n < p) {
    // windows wrap more than once; fall back to listing words
    long long count = 0;
    for (const auto& s : all_words(n)) count += window_counts(s, p) == target;
    return count;
  }
  rec(rec);
  return found;
}

inline auto p_close(const std::string& x, const std::string& y, int p) -> bool {
  return window_counts(x, p) == window_counts(y, p);
}

}  // namespace oracle
