#include "skewmorph/morphism.hpp"

#include <limits>
#include <string>

#include "skewmorph/number_theory.hpp"
#include "skewmorph/pm_format.hpp"

namespace skewmorph {

MorphismResult apply_morphism(const QuhPair& quh, const SignMatrix& skew, MorphismOptions options) {
  const Index n = quh.order();
  const Index blocks = skew.order();
  if (blocks != quh.parameter() + 1) {
    throw ParameterError("skew matrix order " + std::to_string(blocks) + " != m+1 = " +
                         std::to_string(quh.parameter() + 1));
  }
  if (n > kMaxPmOrder / blocks) throw ParameterError("morphism output order too large");
  if (const QuhDefect defect = quh_defect(quh); defect != QuhDefect::None) {
    throw ValidationError("QUH input invalid: " + std::string(describe(defect)));
  }
  if (!is_skew_hadamard(skew)) throw ValidationError("skew input invalid: not skew-Hadamard");

  const SignMatrix::Storage& a = quh.a_part().entries();
  const SignMatrix::Storage& b = quh.b_part().entries();
  SignMatrix::Storage r(n * blocks, n * blocks);
  for (Index i = 0; i < blocks; ++i) {
    for (Index j = 0; j < blocks; ++j) {
      auto block = r.block(i * n, j * n, n, n);
      if (i == j) {
        block = a;
      } else {
        block = static_cast<std::int8_t>(skew(i, j)) * b;
      }
    }
  }

  MorphismResult result{SignMatrix(std::move(r)), n, blocks};
  if (options.verify_output && !is_hadamard(result.matrix)) {
    throw ValidationError("morphism output failed R Rt = n(m+1) I");
  }
  return result;
}

CorollaryRecipe corollary_order(std::int64_t q, int n) {
  const auto pp = prime_power(q);
  if (!pp || q % 4 != 3) throw ParameterError("q must be a prime power congruent to 3 mod 4");
  if (n < 1) throw ParameterError("n must be positive");
  std::int64_t power = 1;  // q^(n-1)
  for (int i = 1; i < n; ++i) {
    if (power > std::numeric_limits<std::int64_t>::max() / (q + 1) / q) throw ParameterError("order overflows");
    power *= q;
  }
  return CorollaryRecipe{power * (q + 1), n - 1, q};
}

MorphismResult corollary_matrix(std::int64_t q, int n, MorphismOptions options) {
  const CorollaryRecipe recipe = corollary_order(q, n);
  return apply_morphism(fks_quh(q, recipe.fks_depth), paley_skew(recipe.skew_q), options);
}

bool quartic_is_minimal(std::int64_t m) {
  if (m < 1) throw ParameterError("m must be positive");
  return !is_perfect_square(m + 1);
}

}  // namespace skewmorph
