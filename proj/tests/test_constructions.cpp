#include <cmath>
#include <complex>

#include <doctest.h>

#include "oracles.hpp"
#include "skewmorph/constructions.hpp"

using namespace skewmorph;

namespace {

SignMatrix::Storage rows(Index n, std::initializer_list<int> values) {
  SignMatrix::Storage s(n, n);
  auto it = values.begin();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) s(i, j) = static_cast<std::int8_t>(*it++);
  }
  return s;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("paley_skew(3) matches the hand-built matrix") {
    const SignMatrix h = paley_skew(3);
    CHECK(h.entries() == rows(4, {1, 1, 1, 1, -1, 1, -1, 1, -1, 1, 1, -1, -1, -1, 1, 1}));
    CHECK(is_skew_hadamard(h));
    // Six row inner products, all zero.
    const auto g = oracle::to_grid(h);
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        std::int64_t dot = 0;
        for (int k = 0; k < 4; ++k) dot += g[i][k] * g[j][k];
        CHECK(dot == 0);
      }
    }
  }

  TEST_CASE("paley_skew over prime and prime-power fields") {
    CHECK(paley_skew(7).order() == 8);
    CHECK(is_skew_hadamard(paley_skew(7)));
    CHECK(paley_skew(27).order() == 28);
    CHECK(is_skew_hadamard(paley_skew(27)));
    CHECK(is_skew_hadamard(paley_skew(243)));
  }

  TEST_CASE("paley_skew parameter errors") {
    CHECK_THROWS_AS(paley_skew(5), ParameterError);
    CHECK_THROWS_AS(paley_skew(15), ParameterError);
    CHECK_THROWS_AS(paley_skew(2), ParameterError);
    CHECK_THROWS_AS(paley_skew(9), ParameterError);
    CHECK_THROWS_AS(paley_skew(-1), ParameterError);
  }

  TEST_CASE("every Paley matrix for q <= 200 passes all three checks") {
    for (const std::int64_t q : oracle::prime_powers_3_mod_4(200)) {
      CAPTURE(q);
      const SignMatrix h = paley_skew(q);
      CHECK(is_skew_hadamard(h));
      CHECK(skew_quadratic_check(h));
      CHECK(quartic_identity_check(h));
    }
  }

  TEST_CASE("fks_quh(3, 1)") {
    const QuhPair pair = fks_quh(3, 1);
    CHECK(pair.order() == 3);
    CHECK(pair.parameter() == 3);
    CHECK(pair.a_part() == SignMatrix::ones(3));
    CHECK(pair.b_part().entries() == rows(3, {1, -1, 1, 1, 1, -1, -1, 1, 1}));
    const auto aa = gram(pair.a_part(), pair.a_part());
    const auto bb = gram(pair.b_part(), pair.b_part());
    const DenseMatrix<std::int64_t> expected = DenseMatrix<std::int64_t>::Identity(3, 3) * 12;
    CHECK(aa + 3 * bb == expected);
    CHECK(quh_verify(pair));
  }

  TEST_CASE("fks_quh larger instances") {
    const QuhPair p9 = fks_quh(3, 2);
    CHECK(p9.order() == 9);
    CHECK(quh_verify(p9));
    const QuhPair p49 = fks_quh(7, 2);
    CHECK(p49.order() == 49);
    CHECK(p49.parameter() == 7);
    CHECK(quh_verify(p49));
    CHECK(quh_verify(fks_quh(27, 1)));
  }

  TEST_CASE("fks_quh depth zero is the scalar pair") {
    const QuhPair p = fks_quh(11, 0);
    CHECK(p.order() == 1);
    CHECK(p.parameter() == 11);
    CHECK(quh_verify(p));
  }

  TEST_CASE("fks order recursion") {
    for (std::int64_t q : {3, 7}) {
      for (int t = 1; t <= 3; ++t) CHECK(fks_quh(q, t).order() == q * fks_quh(q, t - 1).order());
    }
  }

  TEST_CASE("fks parameter errors") {
    CHECK_THROWS_AS(fks_quh(5, 1), ParameterError);
    CHECK_THROWS_AS(fks_quh(3, -1), ParameterError);
    CHECK_THROWS_AS(fks_quh(3, 20), ParameterError);
  }

  TEST_CASE("quh_verify examples") {
    const QuhPair scalar(5, SignMatrix::ones(1), SignMatrix::ones(1));
    CHECK(quh_verify(scalar));
    const QuhPair rank_one(3, SignMatrix::ones(3), SignMatrix::ones(3));
    CHECK(quh_defect(rank_one) == QuhDefect::GramMismatch);
    CHECK_FALSE(quh_verify(rank_one));

    const QuhPair fks = fks_quh(3, 1);
    const QuhPair wrong_m(7, fks.a_part(), fks.b_part());
    CHECK(quh_defect(wrong_m) == QuhDefect::GramMismatch);

    CHECK(quh_defect(QuhPair(3, SignMatrix::identity(2), SignMatrix::ones(2))) == QuhDefect::ZeroEntry);

    // A = J, B = J with a single flipped sign: A B^T is no longer symmetric.
    SignMatrix::Storage b = SignMatrix::Storage::Ones(2, 2);
    b(0, 1) = -1;
    CHECK(quh_defect(QuhPair(1, SignMatrix::ones(2), SignMatrix(b))) == QuhDefect::NotCommuting);

    CHECK_THROWS_AS(QuhPair(3, SignMatrix::ones(2), SignMatrix::ones(3)), DimensionError);
    CHECK_THROWS_AS(QuhPair(0, SignMatrix::ones(2), SignMatrix::ones(2)), ParameterError);
  }

  TEST_CASE("the uncorrected Gram identity AA^T + BB^T = n(m+1)I fails for the FKS matrices") {
    const QuhPair pair = fks_quh(3, 1);
    const DenseMatrix<std::int64_t> sum = gram(pair.a_part(), pair.a_part()) + gram(pair.b_part(), pair.b_part());
    CHECK(sum != DenseMatrix<std::int64_t>::Identity(3, 3) * 12);
    CHECK(sum(0, 0) == 6);  // 2n on the diagonal
  }

  TEST_CASE("floating-point reconstruction is a unit-modulus complex Hadamard matrix") {
    for (std::int64_t q : {3, 7, 11}) {
      const QuhPair pair = fks_quh(q, 1);
      const Index n = pair.order();
      const double scale = 1.0 / std::sqrt(static_cast<double>(q + 1));
      const double root = std::sqrt(static_cast<double>(q));
      Eigen::MatrixXcd h(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          h(i, j) = std::complex<double>(pair.a_part()(i, j), root * pair.b_part()(i, j)) * scale;
          CHECK(std::abs(std::abs(h(i, j)) - 1.0) < 1e-9);
        }
      }
      const Eigen::MatrixXcd g = h * h.adjoint();
      const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(n, n) * static_cast<double>(n);
      CHECK((g - expected).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}
