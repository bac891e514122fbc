#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lllshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Rational enclosure [lower, upper] of Euler's number:
/// 2.718281828459045 <= e <= 2.718281828459046.
const Rational& e_lower();
const Rational& e_upper();

/// Certified interval [lower, upper] around a quantity that is not computed exactly.
struct Enclosure {
    Rational lower;
    Rational upper;
};

/// Encloses e * x for a nonnegative rational x.
Enclosure e_times(const Rational& x);

/// Encloses base^exponent for 0 <= base <= 1. Intermediate products are rounded
/// outward to `bits` binary digits, so the bounds stay small for huge exponents.
Enclosure power_enclosure(const Rational& base, std::uint64_t exponent, unsigned bits = 192);

/// Outcome of comparing a certified enclosure with 1.
enum class Verdict {
    correct,    // upper < 1
    incorrect,  // lower >= 1
    borderline, // enclosure straddles 1
};

Verdict compare_below_one(const Enclosure& value);

std::string to_string(Verdict v);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

} // namespace lllshift
