#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fracsplit {

// Exact rational arithmetic for exponents, coefficients and initial data.
// Equivalence decisions downstream are exact, never tolerance-based, so
// nothing in the symbolic layer ever touches floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& q);

bool is_integer(const Rational& q);

// floor/ceil as plain integers; throws DomainError when out of range.
long long floor_ll(const Rational& q);
long long ceil_ll(const Rational& q);

// "p" or "p/q" with q > 0.
std::string to_pq_string(const Rational& q);

// Accepts "3", "-7", "3/2", "-0.25". Decimal strings convert exactly
// (no binary-float round trip). Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace fracsplit
