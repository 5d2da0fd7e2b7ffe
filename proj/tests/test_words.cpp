#include <doctest.h>

#include "oracles.hpp"
#include "orbitcensus/error.hpp"
#include "orbitcensus/words.hpp"

using namespace orbitcensus;

namespace {

auto counts_of(const std::string& w, int p) -> std::vector<std::uint32_t> {
  return words::cyclic_pword_counts(BinaryWord::parse(w), p).counts();
}

auto as_u32(const oracle::Counts& c) -> std::vector<std::uint32_t> { return {c.begin(), c.end()}; }

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("binary words parse, index and rotate") {
    const auto x = BinaryWord::parse("[1101000]");
    CHECK(x.length() == 7);
    CHECK(x.to_string() == "1101000");
    CHECK(x.at(0) == 1);
    CHECK(x.at(2) == 0);
    CHECK(x.rotated(1).to_string() == "1010001");
    CHECK(x.ones() == 3);
    CHECK_THROWS_AS(BinaryWord::parse("10a1"), ParameterError);
    CHECK_THROWS_AS(BinaryWord::parse(""), ParameterError);
  }

  TEST_CASE("window counts of the three example words") {
    CHECK(counts_of("1101000", 2) == std::vector<std::uint32_t>{2, 2, 2, 1});
    CHECK(counts_of("1100010", 2) == std::vector<std::uint32_t>{2, 2, 2, 1});
    CHECK(counts_of("0000000", 2) == std::vector<std::uint32_t>{7, 0, 0, 0});
    CHECK_THROWS_AS((void)words::cyclic_pword_counts(BinaryWord::parse("101"), 4), ParameterError);
    CHECK_THROWS_AS((void)words::cyclic_pword_counts(BinaryWord::parse("101"), 0), ParameterError);
  }

  TEST_CASE("window counts agree with the string oracle") {
    for (int n = 1; n <= 11; ++n) {
      for (const auto& w : oracle::all_words(n)) {
        for (int p = 1; p <= std::min(n, 5); ++p) {
          REQUIRE(counts_of(w, p) == as_u32(oracle::window_counts(w, p)));
        }
      }
    }
  }

  TEST_CASE("p-closeness on the example words") {
    const auto x = BinaryWord::parse("1101000");
    const auto y = BinaryWord::parse("1100010");
    const auto z = BinaryWord::parse("1100100");
    CHECK(words::p_close(x, y, 2));
    CHECK(words::p_close(x, z, 2));
    CHECK(words::p_close(x, y, 3));
    CHECK_FALSE(words::p_close(x, y, 4));
    CHECK(words::p_close(x, x, 5));
    CHECK_THROWS_AS((void)words::p_close(x, BinaryWord::parse("110"), 2), ParameterError);
  }

  TEST_CASE("ultrametric distance of the example words") {
    const Necklace x(BinaryWord::parse("1101000"));
    const Necklace y(BinaryWord::parse("1100010"));
    const Necklace z(BinaryWord::parse("1100100"));
    CHECK(words::ultrametric_distance(x, y) == 4);
    CHECK(words::ultrametric_distance(x, z) == 5);
    CHECK(words::ultrametric_distance(z, y) == 5);
    const Necklace ones(BinaryWord::parse("1111111"));
    CHECK(words::ultrametric_distance(ones, ones) == 0);
    const Necklace zeros(BinaryWord::parse("0000000"));
    CHECK(words::ultrametric_distance(ones, zeros) == 7);
  }

  TEST_CASE("canonical rotation is the minimal rotation") {
    CHECK(words::canonical_rotation(BinaryWord::parse("1101000")).to_string() == "0001101");
    CHECK(words::canonical_rotation(BinaryWord::parse("0000000")).to_string() == "0000000");
    CHECK(words::canonical_rotation(BinaryWord::parse("10")).to_string() == "01");
    for (const auto& w : oracle::all_words(10)) {
      REQUIRE(words::canonical_rotation(BinaryWord::parse(w)).to_string() == oracle::min_rotation(w));
    }
  }

  TEST_CASE("necklace enumeration and counts") {
    CHECK(words::necklace_count(7) == 20);
    CHECK(words::necklace_count(11) == 188);
    for (int n = 1; n <= 14; ++n) {
      const auto expected = oracle::necklaces(n);
      const auto got = words::all_necklaces(n);
      REQUIRE(got.size() == expected.size());
      REQUIRE(words::necklace_count(n) == expected.size());
      std::size_t i = 0;
      for (const auto& s : expected) REQUIRE(got[i++].to_string() == s);
    }
    std::vector<std::string> two;
    words::enumerate_words(2, [&](const BinaryWord& w) {
      two.push_back(w.to_string());
      return true;
    });
    CHECK(two == std::vector<std::string>{"00", "01", "10", "11"});
  }

  TEST_CASE("prime orbits") {
    CHECK_FALSE(words::is_prime_orbit(BinaryWord::parse("0101")));
    CHECK(words::is_prime_orbit(BinaryWord::parse("1101000")));
    CHECK_FALSE(words::is_prime_orbit(BinaryWord::parse("1111")));
    for (const auto& w : oracle::all_words(12)) {
      REQUIRE(words::is_prime_orbit(BinaryWord::parse(w)) == oracle::is_primitive(w));
    }
    // prime n: all but the two constant necklaces are prime orbits
    CHECK(words::all_necklaces(13, true).size() == words::necklace_count(13) - 2);
  }

  TEST_CASE("cluster tree on the example necklaces") {
    const std::vector<Necklace> trio{Necklace(BinaryWord::parse("1101000")), Necklace(BinaryWord::parse("1100010")),
                                     Necklace(BinaryWord::parse("1100100"))};
    const auto tree = words::cluster_tree(trio, 5);
    REQUIRE(tree.size() == 5);
    // d = n - deepest common level: x,y stay together through level 3, z leaves after level 2
    CHECK(tree[1].classes.size() == 1);
    CHECK(tree[2].level == 3);
    CHECK(tree[2].classes.size() == 2);
    CHECK(tree[3].classes.size() == 3);
    const auto two = words::cluster_tree(2, 2);
    CHECK(two[1].classes.size() == 3);
  }

  TEST_CASE("at level n every class is a single necklace") {
    for (int n = 3; n <= 9; ++n) {
      const auto tree = words::cluster_tree(n, n);
      CHECK(tree.back().classes.size() == words::necklace_count(n));
    }
  }
}
