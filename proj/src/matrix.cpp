#include "skewmorph/matrix.hpp"

#include <limits>
#include <string>

namespace skewmorph {

namespace {

using I32Matrix = DenseMatrix<std::int32_t>;
using I64Matrix = DenseMatrix<std::int64_t>;

BigInt max_abs(const IntMatrix& m) {
  BigInt best = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const BigInt v = boost::multiprecision::abs(m(i, j));
      if (v > best) best = v;
    }
  }
  return best;
}

// Sign-matrix products have |entry| <= order, so int32 accumulation is exact
// for any order that fits in memory.
I32Matrix sign_product(const SignMatrix& a, const I32Matrix& b) {
  return a.cast<std::int32_t>() * b;
}

}  // namespace

SignMatrix::SignMatrix(Storage entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("sign matrix must be square");
  if (entries_.rows() == 0) throw DimensionError("sign matrix must have positive order");
  for (Index i = 0; i < entries_.rows(); ++i) {
    for (Index j = 0; j < entries_.cols(); ++j) {
      const int v = entries_(i, j);
      if (v < -1 || v > 1) {
        throw ValidationError("sign matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + std::to_string(v) + " is not in {-1,0,1}");
      }
    }
  }
}

SignMatrix SignMatrix::identity(Index order) { return SignMatrix(Storage::Identity(order, order)); }

SignMatrix SignMatrix::ones(Index order) { return SignMatrix(Storage::Ones(order, order)); }

bool SignMatrix::zero_free() const { return (entries_.array() != 0).all(); }

SignMatrix SignMatrix::transpose() const { return SignMatrix(entries_.transpose()); }

IntMatrix to_int_matrix(const SignMatrix& m) {
  IntMatrix out(m.order(), m.order());
  for (Index i = 0; i < m.order(); ++i) {
    for (Index j = 0; j < m.order(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: order mismatch");
  const BigInt bound = max_abs(a) * max_abs(b) * BigInt(a.cols());
  if (bound < (BigInt(1) << 62)) {
    const I64Matrix narrow_a = a.unaryExpr([](const BigInt& v) { return v.convert_to<std::int64_t>(); });
    const I64Matrix narrow_b = b.unaryExpr([](const BigInt& v) { return v.convert_to<std::int64_t>(); });
    const I64Matrix product = narrow_a * narrow_b;
    return product.unaryExpr([](std::int64_t v) { return BigInt(v); });
  }
  return a * b;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  return SignMatrix(kronecker(a.entries(), b.entries()));
}

DenseMatrix<std::int64_t> gram(const SignMatrix& a, const SignMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("gram: order mismatch");
  return sign_product(a, b.cast<std::int32_t>().transpose()).cast<std::int64_t>();
}

bool is_hadamard(const SignMatrix& h) {
  if (!h.zero_free()) return false;
  const Index n = h.order();
  const I32Matrix g = sign_product(h, h.cast<std::int32_t>().transpose());
  return g == I32Matrix::Identity(n, n) * static_cast<std::int32_t>(n);
}

bool is_skew_hadamard(const SignMatrix& h) {
  const Index n = h.order();
  const I32Matrix sym = h.cast<std::int32_t>() + h.cast<std::int32_t>().transpose();
  if (sym != I32Matrix::Identity(n, n) * 2) return false;
  return is_hadamard(h);
}

bool skew_quadratic_check(const SignMatrix& h) {
  const Index n = h.order();
  const I32Matrix hi = h.cast<std::int32_t>();
  const I32Matrix square = sign_product(h, hi);
  return square == 2 * hi - I32Matrix::Identity(n, n) * static_cast<std::int32_t>(n);
}

bool quartic_identity_check(const SignMatrix& h) {
  const IntMatrix hi = to_int_matrix(h);
  const BigInt order(h.order());
  const BigInt m = order - 1;
  const IntMatrix square = multiply(hi, hi);
  const IntMatrix fourth = multiply(square, square);
  IntMatrix residual = fourth + square * BigInt(2 * (m - 1));
  for (Index i = 0; i < h.order(); ++i) residual(i, i) += order * order;
  for (Index i = 0; i < h.order(); ++i) {
    for (Index j = 0; j < h.order(); ++j) {
      if (residual(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace skewmorph
