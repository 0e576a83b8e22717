// Exact rational scalar type and its text representation.
//
// Every quantity in this library is an arbitrary-precision rational; no
// floating point appears anywhere. The backing type keeps values in
// canonical form (gcd(num, den) = 1, den >= 1) after every operation.

#ifndef DERHAM_RATIONAL_HPP
#define DERHAM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace derham {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

/// Parse "3", "-2" or "1/2"; returns nothing on malformed input or a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& value);

/// Parse a comma-separated list like "3,-2,1/2".
std::optional<RationalVector> parse_rational_csv(std::string_view text);

/// Size measure |numerator| * denominator used by the elimination pivot rule.
Integer magnitude_key(const Rational& value);

/// n! as an exact integer.
Integer factorial(unsigned n);

}  // namespace derham

#endif
