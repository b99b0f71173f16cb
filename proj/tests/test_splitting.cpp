#include <doctest.h>

#include "oracles.hpp"
#include "skewmorph/number_theory.hpp"
#include "skewmorph/splitting.hpp"

using namespace skewmorph;

TEST_SUITE("splitting") {
  TEST_CASE("disc_K") {
    CHECK(disc_K(19) == 9025);
    CHECK(disc_K(7) == 3136);
    CHECK(disc_K(11) == 17424);
    CHECK(disc_K(43) == 16 * 121 * 43 * 43);
    CHECK_THROWS_AS(disc_K(5), ParameterError);
    CHECK_THROWS_AS(disc_K(15), ParameterError);
  }

  TEST_CASE("disc_K is the product of the three quadratic discriminants") {
    const auto quad_disc = [](std::int64_t d) -> std::int64_t { return ((d % 4) + 4) % 4 == 1 ? d : 4 * d; };
    for (std::int64_t p : {7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83}) {
      const std::int64_t s = squarefree_part(p + 1);
      const oracle::Big product = oracle::Big(quad_disc(-p)) * quad_disc(s) * quad_disc(-p * s);
      CHECK(boost::multiprecision::abs(product) == disc_K(p));
    }
  }

  TEST_CASE("split_type examples") {
    CHECK(split_type(5, 43) == SplitType::SplitsInK2Only);
    CHECK(split_type(3, 7) == SplitType::SplitsInK3Only);
    CHECK(split_type(3, 11) == SplitType::Ramified);
    CHECK_THROWS_AS(split_type(11, 11), ParameterError);
    CHECK_THROWS_AS(split_type(2, 7), ParameterError);
    CHECK_THROWS_AS(split_type(9, 7), ParameterError);
    CHECK_THROWS_AS(split_type(5, 13), ParameterError);
    CHECK(to_string(SplitType::SplitsInK2Only) == "SplitsInK2Only");
  }

  TEST_CASE("split_type totality and the conjugation-fixed characterization") {
    for (std::int64_t p : {7, 11, 19, 23, 31, 43}) {
      const std::int64_t s = squarefree_part(p + 1);
      for (std::int64_t q = 3; q <= 500; q += 2) {
        if (!oracle::is_prime_naive(q) || q == p) continue;
        const SplitType type = split_type(q, p);
        const auto squares = oracle::nonzero_squares(q);
        const auto symbol = [&](std::int64_t a) {
          const std::int64_t r = ((a % q) + q) % q;
          return r == 0 ? 0 : (squares.count(r) ? 1 : -1);
        };
        if (s % q == 0) {
          CHECK(type == SplitType::Ramified);
          continue;
        }
        const bool k2_only = symbol(-p) == -1 && symbol(s) == 1;
        CHECK((type == SplitType::SplitsInK2Only) == k2_only);
        // Never inert: at least one of the three radicands is a square mod q.
        CHECK((symbol(-p) == 1 || symbol(s) == 1 || symbol(-p * s) == 1));
        if (type == SplitType::SplitsInK3Only) CHECK(symbol(-p * s) == 1);
        if (type == SplitType::SplitsCompletely) CHECK(symbol(-p * s) == 1);
      }
    }
  }

  TEST_CASE("nonexistence_witness examples") {
    const NonexistenceVerdict v17 = nonexistence_witness(17, 7);
    CHECK(v17.empty());
    CHECK(v17.witness == 17);
    CHECK(v17.s == 2);
    CHECK(v17.t == 17);

    const NonexistenceVerdict v5 = nonexistence_witness(5, 43);
    CHECK(v5.empty());
    CHECK(v5.witness == 5);
    CHECK(v5.s == 11);

    const NonexistenceVerdict v3 = nonexistence_witness(3, 7);
    CHECK_FALSE(v3.empty());
    CHECK_FALSE(v3.witness.has_value());

    // Squarefree part decides: 17^2 is not obstructed.
    CHECK_FALSE(nonexistence_witness(289, 7).empty());
    CHECK(nonexistence_witness(17 * 9, 7).witness == 17);

    CHECK_THROWS_AS(nonexistence_witness(4, 7), ParameterError);
    CHECK_THROWS_AS(nonexistence_witness(-5, 7), ParameterError);
    CHECK_THROWS_AS(nonexistence_witness(5, 3), ParameterError);
    CHECK_THROWS_AS(nonexistence_witness(5, 13), ParameterError);
  }

  TEST_CASE("verdict invariants") {
    for (std::int64_t p : {7, 11, 19, 23, 31, 43}) {
      for (std::int64_t n = 1; n < 400; n += 2) {
        const NonexistenceVerdict v = nonexistence_witness(n, p);
        bool any = false;
        for (const auto& [q, k] : factorize(v.t)) {
          if (q != 2 && legendre(v.s, q) == 1 && legendre(-p, q) == -1) any = true;
        }
        CHECK(v.empty() == any);
        if (v.empty()) {
          const std::int64_t q = *v.witness;
          CHECK(q % 2 == 1);
          CHECK(v.t % q == 0);
          CHECK(legendre(v.s, q) == 1);
          CHECK(legendre(-p, q) == -1);
        }
      }
    }
  }

  TEST_CASE("x3_emptiness") {
    CHECK(x3_emptiness(5).witness == 5);
    CHECK_FALSE(x3_emptiness(4).empty());
    CHECK(x3_emptiness(33).witness == 11);
    CHECK_FALSE(x3_emptiness(3).empty());
    CHECK_FALSE(x3_emptiness(25).empty());
    CHECK(x3_emptiness(10).witness == 5);
  }

  TEST_CASE("emptiness_table examples") {
    CHECK(emptiness_table(7, 50) == std::vector<std::int64_t>{17, 31, 41, 47});
    CHECK(emptiness_table(23, 20) == std::vector<std::int64_t>{5, 15, 19});
    CHECK(emptiness_table(43, 21) == std::vector<std::int64_t>{5, 7, 15, 19, 21});
    CHECK(emptiness_table(7, 0).empty());
    CHECK_THROWS_AS(emptiness_table(3, 10), ParameterError);
  }

  TEST_CASE("density_scan") {
    // Enumerated offline: of the 23 odd primes <= 100 other than 7, exactly 7
    // (17, 31, 41, 47, 73, 89, 97) satisfy (2/q) = 1 and (-7/q) = -1.
    const DensityResult d = density_scan(7, 100);
    CHECK(d.qualifying == 7);
    CHECK(d.sampled == 23);
    CHECK(d.numerator == 7);
    CHECK(d.denominator == 23);

    const DensityResult single = density_scan(7, 3);
    CHECK(single.sampled == 1);
    CHECK(single.qualifying == 0);
    CHECK(single.numerator == 0);
    CHECK(single.denominator == 1);

    CHECK_THROWS_AS(density_scan(7, 2), ParameterError);
    CHECK_THROWS_AS(density_scan(3, 100), ParameterError);
  }
}
