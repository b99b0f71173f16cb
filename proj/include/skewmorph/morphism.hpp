#pragma once

// QUH matrix of order n and parameter m, plus a skew-Hadamard matrix M of
// order m+1, gives a real Hadamard matrix of order n(m+1):
//
//   R = I_{m+1} (x) A + (M - I_{m+1}) (x) B
//
// i.e. A on the diagonal blocks of M and M[i][j] * B off the diagonal. With
// S = M - I skew and S S^T = m I,
//   R R^T = I (x) (A A^T + m B B^T) + (S + S^T) (x) A B^T = n(m+1) I.
// No condition on m+1 being a perfect square is needed.

#include <cstdint>

#include "skewmorph/constructions.hpp"
#include "skewmorph/matrix.hpp"

namespace skewmorph {

struct MorphismResult {
  SignMatrix matrix;
  Index source_order;
  Index skew_order;
};

struct MorphismOptions {
#ifdef NDEBUG
  bool verify_output = false;
#else
  bool verify_output = true;
#endif
};

/// Throws ParameterError if skew.order() != m+1 and ValidationError if the
/// QUH pair or the skew matrix fails its invariants.
MorphismResult apply_morphism(const QuhPair& quh, const SignMatrix& skew, MorphismOptions options = {});

struct CorollaryRecipe {
  std::int64_t order;   // q^n + q^(n-1)
  int fks_depth;        // t = n - 1
  std::int64_t skew_q;  // paley_skew(q) supplies the order q+1 skew matrix
};

/// Order and pipeline for the real Hadamard matrix of order q^n + q^(n-1).
CorollaryRecipe corollary_order(std::int64_t q, int n);

/// Runs the recipe: apply_morphism(fks_quh(q, n-1), paley_skew(q)).
MorphismResult corollary_matrix(std::int64_t q, int n, MorphismOptions options = {});

/// True iff m+1 is not a perfect square, i.e. x^4 + 2(m-1)/(m+1) x^2 + 1 is
/// irreducible over Q and is the minimal polynomial of H / sqrt(m+1). When
/// m+1 = r^2 it splits as (x^2 - 2x/r + 1)(x^2 + 2x/r + 1).
bool quartic_is_minimal(std::int64_t m);

}  // namespace skewmorph
