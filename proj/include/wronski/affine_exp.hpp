#pragma once

#include <string>

#include "wronski/param_poly.hpp"
#include "wronski/rational.hpp"

namespace wronski {

/// cg·g + ch·h + c0: the exponent of sin x or cos x in a quasi-polynomial.
struct AffineExp {
  long cg = 0;
  long ch = 0;
  Rational c0 = 0;

  static AffineExp constant(const Rational& c) { return {0, 0, c}; }

  bool is_constant() const { return cg == 0 && ch == 0; }

  AffineExp operator-() const { return {-cg, -ch, -c0}; }
  AffineExp& operator+=(const AffineExp& o) {
    cg += o.cg;
    ch += o.ch;
    c0 += o.c0;
    return *this;
  }
  AffineExp& operator-=(const AffineExp& o) { return *this += -o; }
  friend AffineExp operator+(AffineExp a, const AffineExp& b) { return a += b; }
  friend AffineExp operator-(AffineExp a, const AffineExp& b) { return a -= b; }
  friend AffineExp operator+(AffineExp a, const Rational& c) {
    a.c0 += c;
    return a;
  }
  friend AffineExp operator-(AffineExp a, const Rational& c) {
    a.c0 -= c;
    return a;
  }
  friend AffineExp operator*(long k, const AffineExp& a) { return {k * a.cg, k * a.ch, k * a.c0}; }

  bool operator==(const AffineExp&) const = default;

  /// Value at (g + dg, h + dh).
  AffineExp shifted(long dg, long dh) const { return {cg, ch, c0 + cg * dg + ch * dh}; }
  Rational evaluate(const Rational& gv, const Rational& hv) const { return cg * gv + ch * hv + c0; }
  ParamPoly to_poly() const;
  /// "15 - 5g", "1 - h", "g", "0".
  std::string to_string() const;
};

}  // namespace wronski
