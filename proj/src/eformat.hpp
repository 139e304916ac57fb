#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rec {

// Printer-style exponent field, 12 characters:
//   sign (blank for +), one digit, '.', five digits, 'E', exponent sign
//   (blank for +), two exponent digits.
// Examples:  " 0.00000E 00"  " 4.15826E-01"  "-6.23300E-01"  " 1.20000E 01"
// Rounding is to 6 significant digits, half to even. Returns nothing for
// non-finite values or when the rounded exponent needs more than two digits.
std::optional<std::string> format_e(double v);

// Parse a field back to a double. Accepts the blank-for-plus convention and
// is lenient about the number of fraction digits so period listings with
// fewer digits can also be read. Leading/trailing blanks are ignored.
std::optional<double> parse_e(std::string_view field);

inline constexpr int kFieldWidth = 12;

}  // namespace rec
