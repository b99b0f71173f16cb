#include "skewmorph/finite_field.hpp"

#include <string>

#include "skewmorph/number_theory.hpp"

namespace skewmorph {

namespace detail {

struct FieldData {
  std::int64_t p;
  int k;
  std::int64_t q;
  std::vector<std::int64_t> modulus;  // monic, length k+1
};

}  // namespace detail

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g over Z/p; g must have a nonzero leading coefficient.
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::int64_t lead_inv = pow_mod(g.back(), static_cast<std::uint64_t>(p - 2), p);
  while (f.size() > dg) {
    const std::int64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = ((f[shift + i] - factor * g[i]) % p + p) % p;
    }
    trim(f);
  }
  return f;
}

Poly digits_of(std::int64_t index, std::int64_t p, int count) {
  Poly digits(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i) {
    digits[i] = index % p;
    index /= p;
  }
  return digits;
}

void require_same_field(const GfElement& a, const GfElement& b) {
  if (!(a.field() == b.field())) throw ParameterError("finite field operands from different fields");
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::int64_t> poly, std::int64_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  if (f.size() < 2) return false;
  const int degree = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= degree / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly divisor = digits_of(idx, p, d);
      divisor.push_back(1);
      if (poly_rem(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

GfField GfField::create(std::int64_t p, int k) {
  if (p < 3 || !is_prime(p)) throw ParameterError("field characteristic must be an odd prime, got " + std::to_string(p));
  if (k < 1) throw ParameterError("field degree must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::int64_t{1} << 31) / p) throw ParameterError("field too large");
    q *= p;
  }
  if (q >= (std::int64_t{1} << 31)) throw ParameterError("field too large");

  // Candidate (c_0, ..., c_{k-1}) number idx has c_0 as its most significant digit.
  Poly modulus;
  for (std::int64_t idx = 0; idx < q; ++idx) {
    Poly candidate(static_cast<std::size_t>(k) + 1, 0);
    std::int64_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      candidate[i] = rest % p;
      rest /= p;
    }
    candidate[k] = 1;
    if (is_irreducible_mod_p(candidate, p)) {
      modulus = std::move(candidate);
      break;
    }
  }
  // Irreducible polynomials of every degree exist over a finite field.
  return GfField(std::make_shared<const detail::FieldData>(detail::FieldData{p, k, q, std::move(modulus)}));
}

std::int64_t GfField::characteristic() const noexcept { return data_->p; }
int GfField::degree() const noexcept { return data_->k; }
std::int64_t GfField::size() const noexcept { return data_->q; }
const std::vector<std::int64_t>& GfField::modulus() const noexcept { return data_->modulus; }

GfElement GfField::zero() const { return GfElement(*this, Poly(static_cast<std::size_t>(data_->k), 0)); }

GfElement GfField::one() const { return from_integer(1); }

GfElement GfField::from_integer(std::int64_t value) const {
  Poly c(static_cast<std::size_t>(data_->k), 0);
  c[0] = ((value % data_->p) + data_->p) % data_->p;
  return GfElement(*this, std::move(c));
}

GfElement GfField::from_coefficients(std::vector<std::int64_t> coefficients) const {
  if (static_cast<int>(coefficients.size()) != data_->k) {
    throw ParameterError("coefficient vector length must equal the field degree");
  }
  for (auto& c : coefficients) c = ((c % data_->p) + data_->p) % data_->p;
  return GfElement(*this, std::move(coefficients));
}

GfElement GfField::from_index(std::int64_t index) const {
  if (index < 0 || index >= data_->q) throw ParameterError("field element index out of range");
  return GfElement(*this, digits_of(index, data_->p, data_->k));
}

std::vector<GfElement> GfField::enumerate() const {
  std::vector<GfElement> elements;
  elements.reserve(static_cast<std::size_t>(data_->q));
  for (std::int64_t i = 0; i < data_->q; ++i) elements.push_back(from_index(i));
  return elements;
}

bool operator==(const GfField& lhs, const GfField& rhs) {
  return lhs.data_ == rhs.data_ || (lhs.data_->p == rhs.data_->p && lhs.data_->modulus == rhs.data_->modulus);
}

std::int64_t GfElement::index() const {
  std::int64_t idx = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    idx = idx * field_.characteristic() + *it;
  }
  return idx;
}

bool GfElement::is_zero() const {
  for (auto c : coefficients_) {
    if (c != 0) return false;
  }
  return true;
}

GfElement operator+(const GfElement& a, const GfElement& b) {
  require_same_field(a, b);
  const std::int64_t p = a.field().characteristic();
  Poly c(a.coefficients_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coefficients_[i] + b.coefficients_[i]) % p;
  return GfElement(a.field_, std::move(c));
}

GfElement operator-(const GfElement& a) {
  const std::int64_t p = a.field().characteristic();
  Poly c(a.coefficients_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (p - a.coefficients_[i]) % p;
  return GfElement(a.field_, std::move(c));
}

GfElement operator-(const GfElement& a, const GfElement& b) { return a + (-b); }

GfElement operator*(const GfElement& a, const GfElement& b) {
  require_same_field(a, b);
  const std::int64_t p = a.field().characteristic();
  const std::size_t k = a.coefficients_.size();
  Poly product(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      product[i + j] = (product[i + j] + a.coefficients_[i] * b.coefficients_[j]) % p;
    }
  }
  Poly reduced = poly_rem(std::move(product), a.field().modulus(), p);
  reduced.resize(k, 0);
  return GfElement(a.field_, std::move(reduced));
}

bool operator==(const GfElement& a, const GfElement& b) {
  return a.field_ == b.field_ && a.coefficients_ == b.coefficients_;
}

GfElement gf_add(const GfElement& a, const GfElement& b) { return a + b; }

GfElement gf_mul(const GfElement& a, const GfElement& b) { return a * b; }

GfElement gf_pow(const GfElement& a, std::uint64_t exponent) {
  GfElement result = a.field().one();
  GfElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

int quadratic_character(const GfElement& a) {
  if (a.is_zero()) return 0;
  const GfField& f = a.field();
  const GfElement euler = gf_pow(a, static_cast<std::uint64_t>((f.size() - 1) / 2));
  return euler == f.one() ? 1 : -1;
}

SignMatrix jacobsthal(const GfField& field) {
  const std::int64_t q = field.size();
  const std::int64_t p = field.characteristic();
  const int k = field.degree();

  std::vector<std::int8_t> chi(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) chi[i] = static_cast<std::int8_t>(quadratic_character(field.from_index(i)));

  std::vector<std::int64_t> digits(static_cast<std::size_t>(q * k));
  for (std::int64_t i = 0; i < q; ++i) {
    const Poly d = digits_of(i, p, k);
    std::copy(d.begin(), d.end(), digits.begin() + i * k);
  }

  SignMatrix::Storage entries(q, q);
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = 0; j < q; ++j) {
      std::int64_t diff = 0;
      for (int l = k - 1; l >= 0; --l) {
        diff = diff * p + (digits[i * k + l] - digits[j * k + l] + p) % p;
      }
      entries(i, j) = chi[diff];
    }
  }
  return SignMatrix(std::move(entries));
}

}  // namespace skewmorph
