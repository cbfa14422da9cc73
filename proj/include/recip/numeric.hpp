#pragma once

// Number types shared by every module: exact big integers and rationals
// (GMP), plus a 64-digit binary float used only for diagnostics.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace recip {

using BigInt = mpz_class;
using BigCount = mpz_class;  // always >= 0
using Rational = mpq_class;

using HighFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<64>,
    boost::multiprecision::et_off>;

/// Decimal digits carried by HighFloat.
inline constexpr unsigned kHighFloatDigits = 64;

HighFloat to_high(const BigInt& x);
HighFloat to_high(const Rational& x);

std::string to_string(const BigInt& x);

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);

/// 10^-digits as an exact rational.
Rational decimal_tolerance(unsigned digits);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

enum class Rounding { Down, Up, Nearest };

/// Fixed-point decimal rendering with `digits` places after the point.
/// Down/Up give a directed (certified) bound; Nearest rounds half away
/// from zero.
std::string to_decimal(const Rational& x, unsigned digits, Rounding mode);

/// Scientific rendering of a HighFloat with `digits` significant digits.
std::string to_decimal(const HighFloat& x, unsigned digits);

}  // namespace recip
