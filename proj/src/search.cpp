#include "skewmorph/search.hpp"

#include <bit>
#include <vector>

namespace skewmorph {

namespace {

// Bit k set means entry k is -1.
struct Row {
  std::uint32_t a;
  std::uint32_t b;
};

class Backtracker {
 public:
  Backtracker(int n, std::int64_t m, std::uint64_t budget) : n_(n), m_(m), budget_(budget) {
    rows_.reserve(static_cast<std::size_t>(n));
  }

  SearchOutcome run() {
    const bool found = extend();
    if (aborted_) return {SearchStatus::Aborted, std::nullopt, nodes_};
    if (!found) return {SearchStatus::ExhaustedEmpty, std::nullopt, nodes_};
    return {SearchStatus::Found, to_pair(), nodes_};
  }

 private:
  // sum_k x_k y_k for sign vectors encoded as bit masks.
  std::int64_t dot(std::uint32_t x, std::uint32_t y) const { return n_ - 2 * std::popcount(x ^ y); }

  bool orthogonal(const Row& r, const Row& s) const {
    if (dot(r.a, s.a) + m_ * dot(r.b, s.b) != 0) return false;
    return dot(s.a, r.b) == dot(r.a, s.b);
  }

  bool extend() {
    if (static_cast<int>(rows_.size()) == n_) return true;
    const std::uint32_t a_count = std::uint32_t{1} << (n_ - 1);
    const std::uint32_t b_count = std::uint32_t{1} << n_;
    for (std::uint32_t ai = 0; ai < a_count; ++ai) {
      for (std::uint32_t b = 0; b < b_count; ++b) {
        if (++nodes_ > budget_) {
          aborted_ = true;
          return false;
        }
        const Row candidate{ai << 1, b};
        bool ok = true;
        for (const Row& prev : rows_) {
          if (!orthogonal(prev, candidate)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        rows_.push_back(candidate);
        if (extend()) return true;
        rows_.pop_back();
        if (aborted_) return false;
      }
    }
    return false;
  }

  QuhPair to_pair() const {
    SignMatrix::Storage a(n_, n_);
    SignMatrix::Storage b(n_, n_);
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        a(i, k) = (rows_[i].a >> k) & 1U ? -1 : 1;
        b(i, k) = (rows_[i].b >> k) & 1U ? -1 : 1;
      }
    }
    return QuhPair(m_, SignMatrix(std::move(a)), SignMatrix(std::move(b)));
  }

  int n_;
  std::int64_t m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Row> rows_;
};

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::ExhaustedEmpty: return "EXHAUSTED_EMPTY";
    case SearchStatus::Aborted: return "ABORTED";
  }
  return "?";
}

bool parity_magnitude_empty(int n, std::int64_t m) { return n >= 3 && n % 2 == 1 && m > n; }

SearchOutcome exhaustive_search(int n, std::int64_t m, SearchOptions options) {
  if (n < 1 || n > kMaxSearchOrder) {
    throw ParameterError("search order must be in [1, " + std::to_string(kMaxSearchOrder) + "]");
  }
  if (m < 1 || m > kMaxSearchParameter) throw ParameterError("search parameter m out of range");
  if (options.parity_shortcut && parity_magnitude_empty(n, m)) {
    return {SearchStatus::ExhaustedEmpty, std::nullopt, 0};
  }
  SearchOutcome outcome = Backtracker(n, m, options.node_budget).run();
  if (outcome.witness && !quh_verify(*outcome.witness)) {
    throw ValidationError("search produced a pair failing quh_verify");
  }
  return outcome;
}

}  // namespace skewmorph
