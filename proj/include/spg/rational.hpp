#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace spg {

/// Exact rational in canonical form. Every weight, value and ratio uses it.
using Rational = mpq_class;

/// Parses "p/q" or an integer string. Throws InputError on zero
/// denominators and malformed text.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers keep the "/1" suffix.
std::string to_string(const Rational& value);

/// Decimal rendering for display only.
std::string to_decimal(const Rational& value, int digits = 6);

Rational make_rational(long num, long den = 1);

/// Closed interval with rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

}  // namespace spg
