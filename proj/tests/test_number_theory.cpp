#include <doctest.h>

#include "oracles.hpp"
#include "skewmorph/errors.hpp"
#include "skewmorph/number_theory.hpp"

using namespace skewmorph;

TEST_SUITE("number-theory") {
  TEST_CASE("is_prime agrees with naive trial division") {
    for (std::int64_t n = -3; n < 2000; ++n) CHECK(is_prime(n) == oracle::is_prime_naive(n));
  }

  TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(20) == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(1'000'000).size() == 78498);
  }

  TEST_CASE("prime_power") {
    CHECK(prime_power(27)->prime == 3);
    CHECK(prime_power(27)->exponent == 3);
    CHECK(prime_power(49)->exponent == 2);
    CHECK(prime_power(7)->exponent == 1);
    CHECK_FALSE(prime_power(1).has_value());
    CHECK_FALSE(prime_power(15).has_value());
    CHECK_FALSE(prime_power(0).has_value());
  }

  TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(9) == 1);
    CHECK(squarefree_part(44) == 11);
    CHECK(squarefree_part(8) == 2);
    CHECK(squarefree_part(1) == 1);
    CHECK_THROWS_AS(squarefree_part(0), ParameterError);
    for (std::int64_t n = 1; n <= 500; ++n) {
      for (std::int64_t k = 1; k <= 10; ++k) CHECK(squarefree_part(n * k * k) == squarefree_part(n));
    }
  }

  TEST_CASE("legendre examples") {
    CHECK(legendre(5, 43) == -1);
    CHECK(legendre(2, 17) == 1);
    CHECK(legendre(0, 7) == 0);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(-7, 17) == legendre(10, 17));
    for (std::int64_t q : {3, 5, 7, 11, 101, 199}) CHECK(legendre(1, q) == 1);
    CHECK_THROWS_AS(legendre(3, 2), ParameterError);
    CHECK_THROWS_AS(legendre(3, 9), ParameterError);
    CHECK_THROWS_AS(legendre(3, 1), ParameterError);
  }

  TEST_CASE("legendre agrees with enumerated squares for q <= 200") {
    for (std::int64_t q = 3; q <= 200; q += 2) {
      if (!oracle::is_prime_naive(q)) continue;
      const auto squares = oracle::nonzero_squares(q);
      for (std::int64_t a = 0; a < q; ++a) {
        const int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
        CHECK(legendre(a, q) == expected);
      }
    }
  }

  TEST_CASE("legendre is multiplicative for q <= 200") {
    for (std::int64_t q = 3; q <= 200; q += 2) {
      if (!oracle::is_prime_naive(q)) continue;
      for (std::int64_t a = -q; a <= q; a += 3) {
        for (std::int64_t b = -q; b <= q; b += 5) CHECK(legendre(a * b, q) == legendre(a, q) * legendre(b, q));
      }
    }
  }

  TEST_CASE("pow_mod and integer_sqrt") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(-1, 3, 7) == 6);
    CHECK(pow_mod(5, 0, 1) == 0);
    CHECK(pow_mod(999'999'999'989, 999'999'999'988, 999'999'999'989) == 0);
    CHECK(pow_mod(3, 999'999'999'988, 999'999'999'989) == 1);  // Fermat, prime modulus
    CHECK(integer_sqrt(0) == 0);
    CHECK(integer_sqrt(99) == 9);
    CHECK(integer_sqrt(100) == 10);
    CHECK(integer_sqrt(std::int64_t{3037000499} * 3037000499) == 3037000499);
    CHECK(is_perfect_square(100));
    CHECK_FALSE(is_perfect_square(8));
  }
}
