#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hookzeta {

// Exact arithmetic everywhere in the kernel; no floating point leaks in.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
Integer binomial(long long n, long long k);

Integer factorial(long long n);

/// 2^e as an exact rational; e may be negative.
Rational pow2(long long e);

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// Inverse of to_fraction_string. Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

} // namespace hookzeta
