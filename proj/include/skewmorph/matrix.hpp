#pragma once

// Exact dense integer matrices and the Hadamard-family predicates.
//
// Two carriers are used throughout:
//   DenseMatrix<Scalar>  row-major Eigen matrix templated on the scalar;
//                        IntMatrix = DenseMatrix<BigInt> is the unbounded one.
//   SignMatrix           square matrix with entries in {-1, 0, +1}, stored as
//                        int8 and validated on construction.
//
// Every product is exact. Products of sign matrices are accumulated in a
// machine integer wide enough for the bound |entry| <= order; products of
// IntMatrix values narrow to int64 only when the operand magnitudes prove the
// result fits, and otherwise stay in BigInt.

#include <cstdint>

#include <Eigen/Core>

#include "skewmorph/detail/bigint_eigen.hpp"
#include "skewmorph/errors.hpp"

namespace skewmorph {

using Index = Eigen::Index;
using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntMatrix = DenseMatrix<BigInt>;

class SignMatrix {
 public:
  using Storage = DenseMatrix<std::int8_t>;

  /// Throws DimensionError if `entries` is not square or is empty, and
  /// ValidationError if any entry lies outside {-1, 0, +1}.
  explicit SignMatrix(Storage entries);

  static SignMatrix identity(Index order);
  static SignMatrix ones(Index order);

  Index order() const noexcept { return entries_.rows(); }
  int operator()(Index i, Index j) const { return entries_(i, j); }
  const Storage& entries() const noexcept { return entries_; }

  bool zero_free() const;
  SignMatrix transpose() const;

  template <typename Scalar>
  DenseMatrix<Scalar> cast() const {
    return entries_.template cast<Scalar>();
  }

  friend bool operator==(const SignMatrix& lhs, const SignMatrix& rhs) {
    return lhs.order() == rhs.order() && lhs.entries_ == rhs.entries_;
  }

 private:
  Storage entries_;
};

IntMatrix to_int_matrix(const SignMatrix& m);

template <typename Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: order mismatch");
  return a * b;
}

/// Exact product of unbounded integer matrices.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Block (i, j) of the result is a(i, j) * b.
template <typename Scalar>
DenseMatrix<Scalar> kronecker(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

/// a * b^T for sign matrices, exact in int64.
DenseMatrix<std::int64_t> gram(const SignMatrix& a, const SignMatrix& b);

/// h is zero-free and h h^T = n I.
bool is_hadamard(const SignMatrix& h);

/// is_hadamard(h) and h + h^T = 2 I.
bool is_skew_hadamard(const SignMatrix& h);

/// h^2 = 2h - (m+1) I, where m+1 is the order of h.
bool skew_quadratic_check(const SignMatrix& h);

/// h^4 + 2(m-1) h^2 + (m+1)^2 I = 0, the quartic x^4 + 2(m-1)/(m+1) x^2 + 1
/// evaluated at h / sqrt(m+1) and cleared of denominators.
bool quartic_identity_check(const SignMatrix& h);

}  // namespace skewmorph
