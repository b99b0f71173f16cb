#pragma once

// Elementary rational-integer number theory: primality, factorization,
// squarefree parts and the Legendre symbol. Inputs are bounded by int64;
// factorization is trial division, adequate up to ~1e12.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace skewmorph {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

bool is_prime(std::int64_t n);

/// base^exponent mod modulus, modulus >= 1.
std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t modulus);

/// Prime factorization of n >= 1 as ascending (prime, multiplicity) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<PrimePower> prime_power(std::int64_t q);

/// Product of the primes dividing n to an odd power. Throws ParameterError for n < 1.
std::int64_t squarefree_part(std::int64_t n);

/// Legendre symbol (a/q) by Euler's criterion. Throws ParameterError unless q is an odd prime.
int legendre(std::int64_t a, std::int64_t q);

/// Primes <= limit, ascending (Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// floor(sqrt(n)) for n >= 0.
std::int64_t integer_sqrt(std::int64_t n);

inline bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = integer_sqrt(n);
  return r * r == n;
}

}  // namespace skewmorph
