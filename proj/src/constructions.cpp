#include "skewmorph/constructions.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "skewmorph/finite_field.hpp"
#include "skewmorph/number_theory.hpp"
#include "skewmorph/pm_format.hpp"

namespace skewmorph {

namespace {

GfField field_for(std::int64_t q) {
  const auto pp = prime_power(q);
  if (!pp || pp->prime == 2) throw ParameterError("q must be an odd prime power, got " + std::to_string(q));
  if (q % 4 != 3) throw ParameterError("q must be congruent to 3 mod 4, got " + std::to_string(q));
  if (q >= kMaxPmOrder) throw ParameterError("q too large for a dense construction");
  return GfField::create(pp->prime, pp->exponent);
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::int64_t parse_positive(const std::string& word, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size() || value <= 0) {
    throw ParseError(std::string("QUH: ") + what + " must be a positive decimal integer");
  }
  return value;
}

}  // namespace

QuhPair::QuhPair(std::int64_t parameter, SignMatrix a_part, SignMatrix b_part)
    : m_(parameter), a_(std::move(a_part)), b_(std::move(b_part)) {
  if (a_.order() != b_.order()) throw DimensionError("QUH parts must have equal order");
  if (m_ < 1) throw ParameterError("QUH parameter m must be positive");
}

SignMatrix paley_skew(std::int64_t q) {
  const SignMatrix jac = jacobsthal(field_for(q));
  SignMatrix::Storage h(q + 1, q + 1);
  h.row(0).setOnes();
  h.col(0).tail(q).setConstant(-1);
  h.bottomRightCorner(q, q) = jac.entries() + SignMatrix::Storage::Identity(q, q);
  return SignMatrix(std::move(h));
}

QuhPair fks_quh(std::int64_t q, int t) {
  if (t < 0) throw ParameterError("FKS depth t must be non-negative");
  const SignMatrix jac = jacobsthal(field_for(q));
  std::int64_t order = 1;
  for (int i = 0; i < t; ++i) {
    if (order > kMaxPmOrder / q) throw ParameterError("FKS order q^t too large");
    order *= q;
  }

  using Storage = SignMatrix::Storage;
  const Storage ones = Storage::Ones(q, q);
  const Storage identity = Storage::Identity(q, q);
  Storage a = Storage::Ones(1, 1);
  Storage b = Storage::Ones(1, 1);
  for (int step = 0; step < t; ++step) {
    Storage next_a = kronecker(ones, b);
    Storage next_b = kronecker(identity, a) + kronecker(jac.entries(), b);
    a = std::move(next_a);
    b = std::move(next_b);
  }
  SignMatrix a_part(std::move(a));
  SignMatrix b_part(std::move(b));
  // I (x) A_{t-1} exactly fills the zero diagonal blocks of Q (x) B_{t-1}.
  if (!a_part.zero_free() || !b_part.zero_free()) throw ValidationError("FKS recursion produced a zero entry");
  return QuhPair(q, std::move(a_part), std::move(b_part));
}

QuhDefect quh_defect(const QuhPair& candidate) {
  const SignMatrix& a = candidate.a_part();
  const SignMatrix& b = candidate.b_part();
  if (!a.zero_free() || !b.zero_free()) return QuhDefect::ZeroEntry;

  const auto ab = gram(a, b);
  if (ab != ab.transpose()) return QuhDefect::NotCommuting;

  const Index n = candidate.order();
  const BigInt m = candidate.parameter();
  const BigInt target = BigInt(n) * (m + 1);
  const auto aa = gram(a, a);
  const auto bb = gram(b, b);
  const bool narrow = candidate.parameter() <= std::numeric_limits<std::int32_t>::max();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const BigInt expected = i == j ? target : BigInt(0);
      if (narrow) {
        const std::int64_t value = aa(i, j) + candidate.parameter() * bb(i, j);
        if (BigInt(value) != expected) return QuhDefect::GramMismatch;
      } else if (BigInt(aa(i, j)) + m * BigInt(bb(i, j)) != expected) {
        return QuhDefect::GramMismatch;
      }
    }
  }
  return QuhDefect::None;
}

std::string_view describe(QuhDefect defect) {
  switch (defect) {
    case QuhDefect::None: return "ok";
    case QuhDefect::ZeroEntry: return "zero entry in A or B";
    case QuhDefect::NotCommuting: return "ABt != BAt";
    case QuhDefect::GramMismatch: return "AAt + m BBt != n(m+1)I";
  }
  return "unknown";
}

void write_quh(std::ostream& out, const QuhPair& pair) {
  const Index n = pair.order();
  out << "QUH " << n << ' ' << pair.parameter() << '\n';
  std::string row(static_cast<std::size_t>(n), '0');
  for (const SignMatrix* part : {&pair.a_part(), &pair.b_part()}) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) row[j] = detail::sign_char((*part)(i, j));
      out << row << '\n';
    }
  }
}

std::string to_quh(const QuhPair& pair) {
  std::ostringstream out;
  write_quh(out, pair);
  return out.str();
}

QuhPair read_quh(std::istream& in) {
  std::string line;
  if (!detail::next_line(in, line)) throw ParseError("QUH: empty input");
  const auto words = split_words(line);
  if (words.size() != 3 || words[0] != "QUH" || line != words[0] + " " + words[1] + " " + words[2]) {
    throw ParseError("QUH: header must be 'QUH n m'");
  }
  const std::int64_t n = parse_positive(words[1], "order n");
  const std::int64_t m = parse_positive(words[2], "parameter m");
  if (n > kMaxPmOrder) throw ParseError("QUH: order exceeds " + std::to_string(kMaxPmOrder));

  SignMatrix::Storage a(n, n);
  SignMatrix::Storage b(n, n);
  for (Index i = 0; i < 2 * n; ++i) {
    if (!detail::next_line(in, line)) throw ParseError("QUH: expected " + std::to_string(2 * n) + " rows");
    if (i < n) {
      detail::parse_pm_row(line, n, false, a, i, "QUH A");
    } else {
      detail::parse_pm_row(line, n, false, b, i - n, "QUH B");
    }
  }
  detail::expect_end(in, "QUH");
  return QuhPair(m, SignMatrix(std::move(a)), SignMatrix(std::move(b)));
}

QuhPair parse_quh(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_quh(in);
}

}  // namespace skewmorph
