#pragma once

// PM text format for sign matrices:
//
//   4
//   ++++
//   -+-+
//   -++-
//   --++
//
// Line 1 is the decimal order n; the next n lines hold exactly n characters
// from {'+', '-', '0'} with no separators. Anything else is a ParseError.

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "skewmorph/matrix.hpp"

namespace skewmorph {

/// Largest order the text readers accept.
inline constexpr Index kMaxPmOrder = 1 << 15;

void write_pm(std::ostream& out, const SignMatrix& m);
std::string to_pm(const SignMatrix& m);

SignMatrix read_pm(std::istream& in);
SignMatrix parse_pm(std::string_view text);

namespace detail {

char sign_char(int v);
/// Reads one row of `order` PM characters; `allow_zero` false rejects '0'.
void parse_pm_row(std::string_view line, Index order, bool allow_zero, SignMatrix::Storage& dest,
                  Index row, std::string_view what);
/// Reads a line, stripping the trailing '\n'. Returns false at end of stream.
bool next_line(std::istream& in, std::string& line);
/// Rejects anything but blank lines after the payload.
void expect_end(std::istream& in, std::string_view what);

}  // namespace detail

}  // namespace skewmorph
