#include "skewmorph/number_theory.hpp"

#include <cmath>
#include <string>

#include "skewmorph/errors.hpp"

namespace skewmorph {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exponent, std::int64_t modulus) {
  if (modulus < 1) throw ParameterError("pow_mod: modulus must be positive");
  using u128 = unsigned __int128;
  const auto mod = static_cast<std::uint64_t>(modulus);
  std::int64_t reduced = base % modulus;
  if (reduced < 0) reduced += modulus;
  std::uint64_t b = static_cast<std::uint64_t>(reduced);
  std::uint64_t result = 1 % mod;
  while (exponent > 0) {
    if (exponent & 1U) result = static_cast<std::uint64_t>(u128(result) * b % mod);
    b = static_cast<std::uint64_t>(u128(b) * b % mod);
    exponent >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw ParameterError("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> factors;
  for (std::int64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    int k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) factors.emplace_back(d, k);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::optional<PrimePower> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return PrimePower{factors.front().first, factors.front().second};
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n < 1) throw ParameterError("squarefree_part: n must be positive, got " + std::to_string(n));
  std::int64_t part = 1;
  for (const auto& [p, k] : factorize(n)) {
    if (k % 2 == 1) part *= p;
  }
  return part;
}

int legendre(std::int64_t a, std::int64_t q) {
  if (q < 3 || !is_prime(q)) {
    throw ParameterError("legendre: modulus must be an odd prime, got " + std::to_string(q));
  }
  const std::int64_t euler = pow_mod(a, static_cast<std::uint64_t>((q - 1) / 2), q);
  if (euler == 0) return 0;
  return euler == 1 ? 1 : -1;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::int64_t integer_sqrt(std::int64_t n) {
  if (n < 0) throw ParameterError("integer_sqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

}  // namespace skewmorph
