#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace dmod {

// Exact rational scalar. boost keeps it reduced with positive denominator,
// which is exactly the normal form the rest of the code relies on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with an optional leading sign. Throws ParseError on
// malformed input or q = 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q". Used in algebra syntax.
std::string rational_to_string(const Rational& r);

// Always "p/q", the canonical scalar form in JSON reports.
std::string rational_to_canonical(const Rational& r);

Rational factorial(int n);

}  // namespace dmod
