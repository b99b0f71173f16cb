#pragma once

// Prime splitting in K = Q[sqrt(-p), sqrt(s)], s the squarefree part of p+1,
// and the Legendre-symbol nonexistence criterion for QUH matrices.
//
// The quadratic subfields are
//   K1 = Q[sqrt(-p)],  K2 = Q[sqrt(s)],  K3 = Q[sqrt(-ps)].
// An odd prime q not dividing sp splits in K_i iff the Legendre symbol of the
// corresponding radicand is +1; since (-p/q)(s/q) = (-ps/q), q splits in at
// least one of them, so no rational prime is inert in K.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace skewmorph {

enum class SplitType { Ramified, SplitsCompletely, SplitsInK1Only, SplitsInK2Only, SplitsInK3Only };

std::string_view to_string(SplitType type);

enum class Verdict { Empty, Unknown };

struct NonexistenceVerdict {
  Verdict verdict;
  std::optional<std::int64_t> witness;  // set iff verdict == Empty
  std::int64_t n;  // matrix order
  std::int64_t t;  // squarefree part of n
  std::int64_t p;  // QUH parameter
  std::int64_t s;  // squarefree part of p+1

  bool empty() const noexcept { return verdict == Verdict::Empty; }
};

/// Throws ParameterError unless p is a prime congruent to 3 mod 4.
void require_quh_prime(std::int64_t p);

/// disc(K): s^2 p^2 when s = 1 mod 4, else 16 s^2 p^2.
boost::multiprecision::cpp_int disc_K(std::int64_t p);

/// q odd prime, q != p, p prime = 3 mod 4.
SplitType split_type(std::int64_t q, std::int64_t p);

/// Smallest odd prime q dividing the squarefree part t of n with (s/q) = +1
/// and (-p/q) = -1; such a q shows H(n, X_p) is empty. Unknown means only
/// that this criterion is silent.
/// Throws ParameterError if n is even or non-positive, p is not a prime
/// congruent to 3 mod 4, or s = 1 (p = 3; use x3_emptiness).
NonexistenceVerdict nonexistence_witness(std::int64_t n, std::int64_t p);

/// X_3 case: empty if a prime q = 5 mod 6 divides the squarefree part of n.
NonexistenceVerdict x3_emptiness(std::int64_t n);

/// Odd n <= n_max for which nonexistence_witness(n, p) is Empty, ascending.
std::vector<std::int64_t> emptiness_table(std::int64_t p, std::int64_t n_max);

struct DensityResult {
  std::int64_t qualifying;  // primes meeting both Legendre conditions
  std::int64_t sampled;     // odd primes <= limit not dividing sp
  std::int64_t numerator;   // qualifying / sampled, reduced
  std::int64_t denominator;

  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Proportion of odd primes q <= limit, q not dividing sp, with (s/q) = +1 and
/// (-p/q) = -1. Throws ParameterError for limit < 3 or s = 1.
DensityResult density_scan(std::int64_t p, std::int64_t limit);

}  // namespace skewmorph
