#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace aao {

/// Arbitrary-precision integers and rationals used by the exact-rational mode.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" (plain "p" when the denominator is 1).
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

} // namespace aao
