#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>

namespace symtruss {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline double to_double(const Int& a) { return a.convert_to<double>(); }
inline double to_double(const Rat& a) { return a.convert_to<double>(); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// n > 0 decomposed as s^2 * m with m square-free (as far as trial division
// reaches; an unfactored composite remainder is kept whole after a perfect
// square test, which is exact enough for radicands arising at this scale).
std::pair<Int, Int> int_square_split(Int n);

// Prime factors of a square-free positive integer, ascending. A remainder
// that resists trial division is returned as a single factor.
std::vector<Int> square_free_prime_factors(Int n);

// Exact rational from a decimal or fractional literal: "8", "0.25", "3/4".
// Rejects scientific notation and anything else.
std::optional<Rat> parse_rational(const std::string& text);

// "2", "-5/3" style exact rendering.
std::string rational_to_string(const Rat& q);

}  // namespace symtruss
