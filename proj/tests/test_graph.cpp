#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbitcensus/error.hpp"
#include "orbitcensus/graph.hpp"

using namespace orbitcensus;

namespace {

auto vec(const std::string& s) -> EdgeCountVector { return EdgeCountVector::parse(s); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("de Bruijn graph structure") {
    const auto g2 = graph::build_debruijn(2);
    CHECK(g2.vertex_count() == 2);
    CHECK(g2.edge_count() == 4);
    CHECK(g2.tail(0b01) == 0);
    CHECK(g2.head(0b01) == 1);
    CHECK(g2.tail(0b10) == 1);
    CHECK(g2.head(0b10) == 0);
    for (int p = 2; p <= 6; ++p) {
      const auto g = graph::build_debruijn(p);
      CHECK(g.edge_count() == 2 * g.vertex_count());
      for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
        for (auto a : g.out_edges(u)) CHECK(g.tail(a) == u);
        for (auto a : g.in_edges(u)) CHECK(g.head(a) == u);
      }
      for (std::uint32_t a = 0; a < g.edge_count(); ++a) {
        for (std::uint32_t b = 0; b < g.edge_count(); ++b) {
          // b follows a iff a's last p-1 letters are b's first p-1 letters
          const auto sa = oracle::word_string(a, p);
          const auto sb = oracle::word_string(b, p);
          REQUIRE(g.follows(a, b) == (sa.substr(1) == sb.substr(0, static_cast<std::size_t>(p - 1))));
        }
      }
    }
    CHECK(graph::build_debruijn(4).vertex_count() == 8);
    CHECK_THROWS_AS((void)graph::build_debruijn(1), ParameterError);
  }

  TEST_CASE("words map to closed paths") {
    auto names = [](const std::vector<PWord>& path) {
      std::vector<std::string> s;
      for (const auto& e : path) s.push_back(e.to_string());
      return s;
    };
    CHECK(names(graph::word_to_path(BinaryWord::parse("010"), 2)) == std::vector<std::string>{"01", "10", "00"});
    CHECK(names(graph::word_to_path(BinaryWord::parse("0000"), 2)) ==
          std::vector<std::string>{"00", "00", "00", "00"});
    const auto g = graph::build_debruijn(3);
    for (int n = 3; n <= 9; ++n) {
      for (const auto& w : oracle::all_words(n)) {
        const auto path = graph::word_to_path(BinaryWord::parse(w), 3);
        REQUIRE(path.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < path.size(); ++i) {
          REQUIRE(g.follows(path[i].bits, path[(i + 1) % path.size()].bits));
        }
      }
    }
  }

  TEST_CASE("balance and connectivity") {
    CHECK(graph::is_balanced(vec("2:2:2:1")));
    CHECK_FALSE(graph::is_balanced(vec("1:1:0:0")));
    CHECK(graph::support_connected(vec("5:0:0:0")));
    CHECK_FALSE(graph::support_connected(vec("1:0:0:1")));
    CHECK(graph::support_connected(vec("2:2:2:1")));
    CHECK_THROWS_AS((void)graph::support_connected(vec("0:0:0:0")), ParameterError);
    CHECK_FALSE(graph::is_realizable(vec("1:0:0:1")));
    CHECK(graph::is_realizable(vec("0:1:1:0")));
  }

  TEST_CASE("balance system rank is 2^(p-1) - 1") {
    for (int p = 2; p <= 8; ++p) CHECK(graph::balance_rank(p) == (1 << (p - 1)) - 1);
  }

  TEST_CASE("admissible vectors equal the distinct window counts") {
    for (int p = 2; p <= 4; ++p) {
      for (int n = 1; n <= 13; ++n) {
        std::set<std::vector<std::uint32_t>> expected;
        for (const auto& w : oracle::all_words(n)) {
          const auto c = oracle::window_counts(w, p);
          expected.insert(std::vector<std::uint32_t>(c.begin(), c.end()));
        }
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& v : graph::admissible_vectors(n, p)) REQUIRE(got.insert(v.counts()).second);
        REQUIRE(got == expected);
      }
    }
    const auto three = graph::admissible_vectors(3, 2);
    CHECK(three.size() == 4);
    CHECK(graph::admissible_vectors(1, 2).size() == 2);
    bool has_alternating = false;
    for (const auto& v : graph::admissible_vectors(4, 2)) has_alternating |= v == vec("0:2:2:0");
    CHECK(has_alternating);
  }

  TEST_CASE("partitioned enumeration covers the stream exactly once") {
    const auto whole = graph::admissible_vectors(20, 3);
    std::vector<EdgeCountVector> parts;
    for (std::uint32_t s = 0; s <= 20; ++s) {
      graph::enumerate_admissible_vectors(20, 3, [&](const EdgeCountVector& v) {
        parts.push_back(v);
        return true;
      }, s, s + 1);
    }
    CHECK(parts == whole);
  }

  TEST_CASE("cluster counts") {
    CHECK(graph::count_admissible(3, 2).count == 4);
    CHECK(graph::count_admissible(1, 2).count == 2);
    double previous = 1e9;
    for (int n : {50, 100, 200}) {
      const auto c = graph::count_admissible(n, 2);
      REQUIRE(c.ratio.has_value());
      const double gap = std::abs(*c.ratio - 1.0);
      CHECK(gap < previous);
      previous = gap;
    }
    CHECK_THROWS_AS(graph::check_enumeration_capacity(41, 4), CapacityError);
    CHECK_THROWS_AS(graph::check_enumeration_capacity(201, 3), CapacityError);
    CHECK_NOTHROW(graph::check_enumeration_capacity(40, 4));
  }
}
