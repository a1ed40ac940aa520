#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wronski {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// Always "p/q", including "n/1" for integers.
std::string to_fraction_string(const Rational& r);

/// Short human form: "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace wronski
