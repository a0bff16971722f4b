#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace turanl2 {

/// Exact arbitrary-precision rational. Every density, threshold and margin in
/// the library is carried in this type; nothing is rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p" or "-p/q". Throws TuranError(ParseError) on malformed
/// input or a zero denominator.
Rational parseRational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string toString(const Rational& value);
std::string toString(const BigInt& value);

inline Rational rat(std::int64_t num, std::int64_t den = 1) {
  return Rational(num) / Rational(den);
}

inline Rational absValue(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace turanl2
