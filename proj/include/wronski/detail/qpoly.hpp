#pragma once

// Dense univariate polynomials over Q. Internal helper for the bivariate
// gcd and for Sturm sequences; not part of the public surface.

#include <utility>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski::detail {

/// coefficient of x^k at index k; trimmed (empty == zero polynomial).
using QPoly = std::vector<Rational>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
QPoly derivative(const QPoly& p);
Rational evaluate(const QPoly& p, const Rational& x);
/// Euclidean division; b must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& p);
/// True only when gcd(a, b) = 1 is certified by reduction modulo a prime
/// that keeps both degrees; false means "unknown".
bool certainly_coprime(const QPoly& a, const QPoly& b);
/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace wronski::detail
