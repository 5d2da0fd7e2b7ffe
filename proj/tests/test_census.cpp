#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbitcensus/census.hpp"
#include "orbitcensus/error.hpp"
#include "orbitcensus/graph.hpp"

using namespace orbitcensus;

namespace {

auto vec(const std::string& s) -> EdgeCountVector { return EdgeCountVector::parse(s); }

auto frac(const BigInt& a, const BigInt& b) -> Rational {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

auto to_counts(const EdgeCountVector& v) -> oracle::Counts {
  return {v.counts().begin(), v.counts().end()};
}

auto same_tables(const CensusTable& a, const CensusTable& b) -> bool {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.records()[i].vector != b.records()[i].vector) return false;
    if (a.records()[i].size_words != b.records()[i].size_words) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("small censuses") {
    const auto t3 = census::brute_census(3, 2);
    REQUIRE(t3.size() == 4);
    CHECK(t3.find(vec("3:0:0:0"))->size_words == 1);
    CHECK(t3.find(vec("0:0:0:3"))->size_words == 1);
    CHECK(t3.find(vec("1:1:1:0"))->size_words == 3);
    CHECK(t3.find(vec("0:1:1:1"))->size_words == 3);
    CHECK(census::moments(t3, 2) == 20);

    const auto t2 = census::brute_census(2, 2);
    REQUIRE(t2.size() == 3);
    CHECK(t2.find(vec("0:1:1:0"))->size_words == 2);
    CHECK(t2.find(vec("1:1:0:0")) == nullptr);
  }

  TEST_CASE("BEST cluster sizes") {
    CHECK(census::best_cluster_size(vec("1:1:1:0")) == 3);
    CHECK(census::best_cluster_size(vec("0:2:2:0")) == 2);
    CHECK(census::best_cluster_size(vec("9:0:0:0")) == 1);
    CHECK(census::best_cluster_size(vec("1:0:0:1")) == 0);
    CHECK_THROWS_AS((void)census::best_cluster_size(vec("1:1:0:0")), ParameterError);

    std::mt19937 rng(7);
    for (int p = 2; p <= 4; ++p) {
      for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> len(p, 12);
        const int n = len(rng);
        const auto vs = graph::admissible_vectors(n, p);
        const auto& v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        REQUIRE(census::best_cluster_size(v) == BigInt(static_cast<long>(oracle::cluster_size_by_search(to_counts(v), p))));
      }
    }
  }

  TEST_CASE("brute census agrees with the string oracle") {
    for (int p = 2; p <= 3; ++p) {
      for (int n = 1; n <= 11; ++n) {
        const auto ref = oracle::census(n, p);
        const auto t = census::brute_census(n, p, {.count_necklaces = true});
        REQUIRE(t.size() == ref.size());
        for (const auto& r : t.records()) {
          const auto it = ref.find(to_counts(r.vector));
          REQUIRE(it != ref.end());
          REQUIRE(r.size_words == BigInt(static_cast<long>(it->second.words)));
          REQUIRE(r.size_necklaces.has_value());
          REQUIRE(*r.size_necklaces == BigInt(static_cast<long>(it->second.necklaces)));
        }
      }
    }
  }

  TEST_CASE("brute and BEST engines agree, workers do not change the table") {
    for (int p = 2; p <= 4; ++p) {
      for (int n = 1; n <= 14; ++n) {
        const auto brute = census::brute_census(n, p);
        REQUIRE(same_tables(brute, census::best_census(n, p)));
      }
    }
    CHECK(same_tables(census::brute_census(15, 3, {.workers = 3}), census::brute_census(15, 3)));
    CHECK(same_tables(census::best_census(30, 3, 4), census::best_census(30, 3, 1)));
  }

  TEST_CASE("partition identity") {
    for (int n : {5, 17, 33}) CHECK(census::best_census(n, 3).total_words() == pow2(static_cast<unsigned long>(n)));
    CHECK(census::moments(census::best_census(21, 4), 1) == pow2(21));
  }

  TEST_CASE("prime length necklace identity") {
    for (int n : {5, 7, 11}) {
      const auto direct = census::brute_census(n, 2, {.count_necklaces = true});
      const auto derived = census::with_prime_necklace_sizes(census::best_census(n, 2));
      for (unsigned k = 1; k <= 4; ++k) {
        const BigInt zk = census::moments(derived, k);
        const BigInt nk = pow(BigInt(n), k);
        CHECK(census::moments(direct, k, Level::necklace) == (zk - 2) / nk + 2);
        CHECK(census::moments(derived, k, Level::necklace) == (zk - 2) / nk + 2);
      }
    }
    CHECK_FALSE(census::with_prime_necklace_sizes(census::best_census(8, 2)).has_necklace_sizes());
    CHECK(census::best_census(13, 3).has_necklace_sizes());
  }

  TEST_CASE("necklace moments need necklace data") {
    const auto t = census::best_census(8, 2);
    CHECK_THROWS_AS((void)census::moments(t, 2, Level::necklace), StateError);
    CHECK_THROWS_AS((void)census::prob_k(t, 2), StateError);
  }

  TEST_CASE("probabilities") {
    const auto t = census::brute_census(7, 2, {.count_necklaces = true});
    CHECK(census::necklace_total(t) == 20);
    CHECK(census::prob_k(t, 1) == doctest::Approx(1.0));
    CHECK(census::prob_k_exact(t, 2) ==
          frac(census::moments(t, 2, Level::necklace), BigInt(400)));
    const auto* c = t.find(EdgeCountVector(2, {2, 2, 2, 1}));
    REQUIRE(c != nullptr);
    CHECK(*c->size_necklaces >= 3);
  }

  TEST_CASE("moment monotonicity") {
    const auto t = census::best_census(24, 3);
    BigInt smallest = t.records().front().size_words;
    for (const auto& r : t.records()) smallest = std::min<BigInt>(smallest, r.size_words);
    const BigInt largest = census::max_cluster(t).size_words;
    for (unsigned k = 1; k < 5; ++k) {
      const BigInt a = census::moments(t, k);
      const BigInt b = census::moments(t, k + 1);
      CHECK(b >= a * smallest);
      CHECK(b <= a * largest);
    }
  }

  TEST_CASE("largest cluster") {
    CHECK(census::max_cluster(census::brute_census(3, 2)).size_words == 3);
    // tie between 1:1:1:0 and 0:1:1:1 goes to the lexicographically smaller vector
    CHECK(census::max_cluster(census::brute_census(3, 2)).vector == vec("0:1:1:1"));
    // homogeneous and unique once n >= 2^(p+1); below that, smaller de Bruijn-like vectors win or tie
    for (int p = 2; p <= 3; ++p) {
      const int e = 1 << p;
      for (int n = 2 * e; n <= 48; n += e) {
        const auto t = census::best_census(n, p);
        const auto& m = census::max_cluster(t);
        for (auto c : m.vector.counts()) REQUIRE(c == static_cast<std::uint32_t>(n / e));
        int maximizers = 0;
        for (const auto& r : t.records()) maximizers += r.size_words == m.size_words ? 1 : 0;
        REQUIRE(maximizers == 1);
      }
    }
    const auto t8 = census::best_census(8, 3);
    CHECK(census::max_cluster(t8).vector == vec("0:1:2:1:1:2:1:0"));
    CHECK(census::max_cluster(t8).size_words == 24);
    CHECK(t8.find(vec("1:1:1:1:1:1:1:1"))->size_words == 16);
    const auto t4 = census::best_census(4, 2);
    CHECK(census::max_cluster(t4).vector == vec("0:1:1:2"));
    CHECK(t4.find(vec("1:1:1:1"))->size_words == 4);
  }

  TEST_CASE("empirical distribution") {
    const auto t = census::best_census(30, 3);
    const auto d = census::empirical_distribution(t, 50);
    REQUIRE(d.size() == 51);
    CHECK(d.back().t == 1.0);
    CHECK(d.back().empirical == 1.0);
    CHECK(d.front().empirical == 0.0);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i].empirical >= d[i - 1].empirical);
  }

  TEST_CASE("mean edge visits") {
    // below n = p a window sees the same letter twice, so the uniform average fails
    CHECK(census::mean_edge_visits_exact(census::best_census(1, 2), 1)[0] == frac(1, 2));
    for (int p = 2; p <= 4; ++p) {
      for (int n : {p, 5, 12, 16}) {
        const auto t = census::best_census(n, p);
        for (const auto& x : census::mean_edge_visits_exact(t, 1)) REQUIRE(x == frac(n, 1 << p));
      }
    }
    const auto t = census::best_census(40, 3);
    const auto m2 = census::mean_edge_visits(t, 2);
    double sum = 0;
    for (double x : m2) {
      sum += x;
      CHECK(std::abs(x - 5.0) < 1.0);
    }
    CHECK(sum == doctest::Approx(40.0));
  }

  TEST_CASE("thresholded edge visits") {
    const auto t = census::best_census(40, 3);
    for (const Rational& th : {Rational(1, 1000), Rational(1, 10), Rational(1, 2), Rational(1)}) {
      Rational sum = 0;
      for (const auto& x : census::thresholded_edge_visits_exact(t, th)) sum += x;
      CHECK(sum == 40);
    }
    for (const auto& x : census::thresholded_edge_visits_exact(t, Rational(1))) CHECK(x == 5);
    const auto small = census::thresholded_edge_visits(t, 0.05);
    CHECK(small[0b000] > 5.0);
    CHECK(small[0b011] < 5.0);
  }

  TEST_CASE("vertices of the next graph order give the same clusters as edges") {
    for (int n = 2; n <= 12; ++n) {
      const auto v = census::brute_vertex_census(n, 2);
      const auto e = census::brute_census(n, 2);
      REQUIRE(v.size() == e.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        REQUIRE(v.records()[i].vector == e.records()[i].vector);
        REQUIRE(v.records()[i].size_words == e.records()[i].size_words);
      }
    }
  }

  TEST_CASE("capacity and parameter errors") {
    CHECK_THROWS_AS((void)census::brute_census(29, 2), CapacityError);
    CHECK_THROWS_AS((void)census::brute_census(25, 2, {.count_necklaces = true}), CapacityError);
    CHECK_THROWS_AS((void)census::best_census(10, 1), ParameterError);
    CHECK(parse_engine("best") == Engine::best);
    CHECK_THROWS_AS((void)parse_engine("magic"), ParameterError);
    CHECK(to_string(Level::necklace) == "necklace");
  }
}
