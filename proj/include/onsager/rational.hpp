#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace onsager {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2", "5/6", "2.25" exactly.
Rational parse_rational(const std::string& text);

/// Parses an exponent in [.., inf] and returns its reciprocal, so "inf"
/// maps to 0 and "4" to 1/4. Nonpositive exponents are rejected.
Rational parse_inverse_exponent(const std::string& text);

/// Reciprocal of an inverse exponent as a double (0 maps to infinity).
double exponent_from_inverse(const Rational& inv);

double to_double(const Rational& r);

/// "5/6", "-1", "0".
std::string to_string(const Rational& r);

}  // namespace onsager
