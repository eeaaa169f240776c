#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace confembed {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// num / den for any nonzero den (the two-argument Rational constructor of
/// older Boost releases rejects negative denominators).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

/// Parses "p", "-p", "p/q". Throws Error(Parse) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline bool is_nonnegative_integer(const Rational& q) {
  return is_integer(q) && q >= 0;
}

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// Narrowing conversion; throws Error(Usage) if q is not an integer in range.
std::int64_t to_int64(const Rational& q);

}  // namespace confembed
