#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace saxl {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den" (or just "num" for integers).
std::string to_string(const Rational& r);

}  // namespace saxl
