#include "skewmorph/pm_format.hpp"

#include <charconv>
#include <sstream>

namespace skewmorph {

namespace detail {

char sign_char(int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); }

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  return true;
}

void parse_pm_row(std::string_view line, Index order, bool allow_zero, SignMatrix::Storage& dest,
                  Index row, std::string_view what) {
  if (static_cast<Index>(line.size()) != order) {
    std::ostringstream msg;
    msg << what << ": row " << row + 1 << " has " << line.size() << " characters, expected " << order;
    throw ParseError(msg.str());
  }
  for (Index j = 0; j < order; ++j) {
    switch (line[j]) {
      case '+': dest(row, j) = 1; break;
      case '-': dest(row, j) = -1; break;
      case '0':
        if (!allow_zero) {
          throw ParseError(std::string(what) + ": zero entry in row " + std::to_string(row + 1));
        }
        dest(row, j) = 0;
        break;
      default:
        throw ParseError(std::string(what) + ": invalid character in row " + std::to_string(row + 1));
    }
  }
}

void expect_end(std::istream& in, std::string_view what) {
  std::string line;
  while (next_line(in, line)) {
    if (!line.empty()) throw ParseError(std::string(what) + ": unexpected trailing content");
  }
}

}  // namespace detail

void write_pm(std::ostream& out, const SignMatrix& m) {
  const Index n = m.order();
  out << n << '\n';
  std::string row(static_cast<std::size_t>(n), '0');
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) row[j] = detail::sign_char(m(i, j));
    out << row << '\n';
  }
}

std::string to_pm(const SignMatrix& m) {
  std::ostringstream out;
  write_pm(out, m);
  return out.str();
}

SignMatrix read_pm(std::istream& in) {
  std::string line;
  if (!detail::next_line(in, line)) throw ParseError("PM: empty input");
  Index order = 0;
  const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), order);
  if (ec != std::errc() || ptr != line.data() + line.size() || order <= 0) {
    throw ParseError("PM: first line must be a positive decimal order");
  }
  if (order > kMaxPmOrder) throw ParseError("PM: order exceeds " + std::to_string(kMaxPmOrder));
  SignMatrix::Storage entries(order, order);
  for (Index i = 0; i < order; ++i) {
    if (!detail::next_line(in, line)) throw ParseError("PM: expected " + std::to_string(order) + " rows");
    detail::parse_pm_row(line, order, true, entries, i, "PM");
  }
  detail::expect_end(in, "PM");
  return SignMatrix(std::move(entries));
}

SignMatrix parse_pm(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_pm(in);
}

}  // namespace skewmorph
