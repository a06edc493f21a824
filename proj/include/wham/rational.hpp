#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace wham {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a" or "a/b" (optional leading sign). Any valid rational is accepted;
/// the result is normalized.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& value);

} // namespace wham
