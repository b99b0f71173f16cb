#include "skewmorph/splitting.hpp"

#include <numeric>
#include <string>

#include "skewmorph/errors.hpp"
#include "skewmorph/number_theory.hpp"

namespace skewmorph {

std::string_view to_string(SplitType type) {
  switch (type) {
    case SplitType::Ramified: return "Ramified";
    case SplitType::SplitsCompletely: return "SplitsCompletely";
    case SplitType::SplitsInK1Only: return "SplitsInK1Only";
    case SplitType::SplitsInK2Only: return "SplitsInK2Only";
    case SplitType::SplitsInK3Only: return "SplitsInK3Only";
  }
  return "?";
}

void require_quh_prime(std::int64_t p) {
  if (!is_prime(p) || p % 4 != 3) {
    throw ParameterError("p must be a prime congruent to 3 mod 4, got " + std::to_string(p));
  }
}

boost::multiprecision::cpp_int disc_K(std::int64_t p) {
  require_quh_prime(p);
  const std::int64_t s = squarefree_part(p + 1);
  boost::multiprecision::cpp_int d = boost::multiprecision::cpp_int(s) * s * p * p;
  if (s % 4 != 1) d *= 16;
  return d;
}

SplitType split_type(std::int64_t q, std::int64_t p) {
  require_quh_prime(p);
  if (q < 3 || !is_prime(q)) throw ParameterError("q must be an odd prime, got " + std::to_string(q));
  if (q == p) throw ParameterError("q must differ from p");
  const std::int64_t s = squarefree_part(p + 1);
  if (s % q == 0) return SplitType::Ramified;
  const int in_k1 = legendre(-p, q);
  const int in_k2 = legendre(s, q);
  if (in_k1 == 1 && in_k2 == 1) return SplitType::SplitsCompletely;
  if (in_k1 == -1 && in_k2 == 1) return SplitType::SplitsInK2Only;
  if (in_k1 == 1 && in_k2 == -1) return SplitType::SplitsInK1Only;
  return SplitType::SplitsInK3Only;
}

NonexistenceVerdict nonexistence_witness(std::int64_t n, std::int64_t p) {
  if (n < 1 || n % 2 == 0) throw ParameterError("n must be a positive odd integer, got " + std::to_string(n));
  require_quh_prime(p);
  const std::int64_t s = squarefree_part(p + 1);
  if (s == 1) throw ParameterError("squarefree part of p+1 is 1 (p = 3); use x3_emptiness");
  const std::int64_t t = squarefree_part(n);

  NonexistenceVerdict verdict{Verdict::Unknown, std::nullopt, n, t, p, s};
  for (const auto& [q, multiplicity] : factorize(t)) {
    if (q == 2) continue;
    if (legendre(s, q) == 1 && legendre(-p, q) == -1) {
      verdict.verdict = Verdict::Empty;
      verdict.witness = q;
      break;
    }
  }
  return verdict;
}

NonexistenceVerdict x3_emptiness(std::int64_t n) {
  const std::int64_t t = squarefree_part(n);
  NonexistenceVerdict verdict{Verdict::Unknown, std::nullopt, n, t, 3, 1};
  for (const auto& [q, multiplicity] : factorize(t)) {
    if (q % 6 == 5) {
      verdict.verdict = Verdict::Empty;
      verdict.witness = q;
      break;
    }
  }
  return verdict;
}

std::vector<std::int64_t> emptiness_table(std::int64_t p, std::int64_t n_max) {
  std::vector<std::int64_t> rows;
  if (n_max < 1) {
    nonexistence_witness(1, p);  // parameter validation only
    return rows;
  }
  for (std::int64_t n = 1; n <= n_max; n += 2) {
    if (nonexistence_witness(n, p).empty()) rows.push_back(n);
  }
  return rows;
}

DensityResult density_scan(std::int64_t p, std::int64_t limit) {
  require_quh_prime(p);
  if (limit < 3) throw ParameterError("density limit must be at least 3");
  const std::int64_t s = squarefree_part(p + 1);
  if (s == 1) throw ParameterError("squarefree part of p+1 is 1 (p = 3)");

  DensityResult result{0, 0, 0, 1};
  for (const std::int64_t q : primes_up_to(limit)) {
    if (q == 2 || q == p || s % q == 0) continue;
    ++result.sampled;
    if (legendre(s, q) == 1 && legendre(-p, q) == -1) ++result.qualifying;
  }
  if (result.sampled == 0) return result;
  const std::int64_t g = std::gcd(result.qualifying, result.sampled);
  result.numerator = result.qualifying / g;
  result.denominator = result.sampled / g;
  return result;
}

}  // namespace skewmorph
