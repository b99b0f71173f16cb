#pragma once

// Paley skew-Hadamard matrices and Fender-Kharaghani-Suda QUH matrices.
//
// A QUH matrix of order n and parameter m has entries in
//   X_m = { (+-1 +- sqrt(-m)) / sqrt(m+1) }
// and is stored exactly as the sign pair (A, B) with
//   H = (A + sqrt(-m) B) / sqrt(m+1).
// H H^* = n I is equivalent to the two integer identities
//   A B^T = B A^T,   A A^T + m B B^T = n (m+1) I.

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "skewmorph/matrix.hpp"

namespace skewmorph {

class QuhPair {
 public:
  /// Throws DimensionError if the parts differ in order and ParameterError if m < 1.
  /// Does not check the Gram identities; see quh_verify.
  QuhPair(std::int64_t parameter, SignMatrix a_part, SignMatrix b_part);

  Index order() const noexcept { return a_.order(); }
  std::int64_t parameter() const noexcept { return m_; }
  const SignMatrix& a_part() const noexcept { return a_; }
  const SignMatrix& b_part() const noexcept { return b_; }

  friend bool operator==(const QuhPair& lhs, const QuhPair& rhs) {
    return lhs.m_ == rhs.m_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  std::int64_t m_;
  SignMatrix a_;
  SignMatrix b_;
};

/// Skew-Hadamard matrix of order q+1 from the Jacobsthal matrix Q of GF(q):
/// first row +1, first column -1 below the corner, lower-right block I + Q.
/// Throws ParameterError unless q is a prime power with q = 3 mod 4.
SignMatrix paley_skew(std::int64_t q);

/// A_t = J_q (x) B_{t-1},  B_t = I_q (x) A_{t-1} + Q (x) B_{t-1},  A_0 = B_0 = [1].
/// Order q^t, parameter q. t = 0 gives the scalar pair.
QuhPair fks_quh(std::int64_t q, int t);

/// Which QUH invariant fails, if any.
enum class QuhDefect { None, ZeroEntry, NotCommuting, GramMismatch };

QuhDefect quh_defect(const QuhPair& candidate);

inline bool quh_verify(const QuhPair& candidate) { return quh_defect(candidate) == QuhDefect::None; }

std::string_view describe(QuhDefect defect);

// QUH text format: "QUH n m", then n rows of A, then n rows of B, each row in
// PM characters with '0' forbidden.
void write_quh(std::ostream& out, const QuhPair& pair);
std::string to_quh(const QuhPair& pair);
QuhPair read_quh(std::istream& in);
QuhPair parse_quh(std::string_view text);

}  // namespace skewmorph
