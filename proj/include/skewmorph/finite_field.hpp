#pragma once

// GF(p^k) for odd p, elements as coefficient vectors modulo a fixed monic
// irreducible polynomial, plus the quadratic character and the Jacobsthal
// matrix built on top of it.
//
// Canonical choices, fixed so that matrices are reproducible:
//   * the modulus is the lexicographically smallest monic irreducible of
//     degree k, comparing coefficient vectors from the constant term upward
//     (for k = 1 this is x);
//   * element number i has coefficients given by the base-p digits of i with
//     the constant term least significant, so element 0 is zero.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "skewmorph/matrix.hpp"

namespace skewmorph {

namespace detail {
struct FieldData;
}

class GfElement;

class GfField {
 public:
  /// Throws ParameterError unless p is an odd prime and k >= 1 with p^k < 2^31.
  static GfField create(std::int64_t p, int k);

  std::int64_t characteristic() const noexcept;
  int degree() const noexcept;
  /// Number of elements q = p^k.
  std::int64_t size() const noexcept;
  /// Monic modulus, coefficients from the constant term upward (length k+1).
  const std::vector<std::int64_t>& modulus() const noexcept;

  GfElement zero() const;
  GfElement one() const;
  /// Image of an integer in the prime subfield.
  GfElement from_integer(std::int64_t value) const;
  /// Coefficients from the constant term upward; reduced mod p, length must equal the degree.
  GfElement from_coefficients(std::vector<std::int64_t> coefficients) const;
  /// Element number `index` of the canonical enumeration, 0 <= index < q.
  GfElement from_index(std::int64_t index) const;

  /// All q elements in canonical order; the first is zero.
  std::vector<GfElement> enumerate() const;

  friend bool operator==(const GfField& lhs, const GfField& rhs);

 private:
  explicit GfField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class GfElement {
 public:
  const GfField& field() const noexcept { return field_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  /// Position in the canonical enumeration.
  std::int64_t index() const;
  bool is_zero() const;

  friend GfElement operator+(const GfElement& a, const GfElement& b);
  friend GfElement operator-(const GfElement& a, const GfElement& b);
  friend GfElement operator*(const GfElement& a, const GfElement& b);
  friend GfElement operator-(const GfElement& a);
  friend bool operator==(const GfElement& a, const GfElement& b);

 private:
  friend class GfField;
  GfElement(GfField field, std::vector<std::int64_t> coefficients)
      : field_(std::move(field)), coefficients_(std::move(coefficients)) {}

  GfField field_;
  std::vector<std::int64_t> coefficients_;
};

// Free-function spellings; all throw ParameterError for operands from different fields.
GfElement gf_add(const GfElement& a, const GfElement& b);
GfElement gf_mul(const GfElement& a, const GfElement& b);
GfElement gf_pow(const GfElement& a, std::uint64_t exponent);

/// chi(a): 0 at zero, +1 on nonzero squares, -1 otherwise (Euler's criterion).
int quadratic_character(const GfElement& a);

/// Q[i][j] = chi(g_i - g_j) under the canonical enumeration.
SignMatrix jacobsthal(const GfField& field);

/// True if the polynomial (coefficients from the constant term up, leading
/// coefficient last and nonzero) is irreducible over Z/p. Trial division by
/// every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::int64_t p);

}  // namespace skewmorph
