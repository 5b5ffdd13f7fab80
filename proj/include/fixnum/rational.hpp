#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace fixnum {

// Exact arithmetic types.  All invariant values are computed and reported
// exactly; floating point is never used.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Renders r in lowest terms as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

// Parses "p", "-p" or "p/q".  Throws std::invalid_argument on malformed
// input or zero denominator.
Rational rational_from_string(const std::string& text);

} // namespace fixnum
