#pragma once

// Exhaustive backtracking search for QUH matrices of tiny order.
//
// Rows are searched as sign pairs (a_i, b_i). A new row is kept only if it is
// orthogonal to every earlier row under the Hermitian inner product, which in
// cleared-denominator integer form is
//   sum_k a_ik a_jk + m sum_k b_ik b_jk = 0
//   sum_k (a_jk b_ik - a_ik b_jk)       = 0.
// Only row negation is used as a symmetry: every row starts with a_i0 = +1.

#include <cstdint>
#include <optional>
#include <string_view>

#include "skewmorph/constructions.hpp"

namespace skewmorph {

enum class SearchStatus { Found, ExhaustedEmpty, Aborted };

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status;
  std::optional<QuhPair> witness;  // set iff status == Found
  std::uint64_t nodes_explored;
};

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  /// For odd n >= 3 with m > n, the sum of b_ik b_jk over n terms is odd, so
  /// |m sum b| >= m > n >= |sum a| and no two rows can be orthogonal.
  bool parity_shortcut = true;
};

inline constexpr int kMaxSearchOrder = 16;
inline constexpr std::int64_t kMaxSearchParameter = std::int64_t{1} << 40;

/// True when the parity/magnitude argument alone shows H(n, X_m) is empty.
bool parity_magnitude_empty(int n, std::int64_t m);

/// Throws ParameterError unless 1 <= n <= kMaxSearchOrder and 1 <= m <= kMaxSearchParameter.
SearchOutcome exhaustive_search(int n, std::int64_t m, SearchOptions options = {});

}  // namespace skewmorph
