#pragma once

#include <string>

#include "wronski/param_poly.hpp"

namespace wronski {

/// Quotient of two ParamPolys, kept reduced with a monic denominator.
///
/// Denominators that turn out to be constants are folded into the numerator,
/// so polynomial-valued quantities always carry den == 1 and never pay for
/// a gcd.
class ParamRat {
 public:
  ParamRat() : den_(1) {}
  ParamRat(const ParamPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  ParamRat(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  ParamRat(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  ParamRat(int c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
  /// Throws ZeroPolynomial when den is zero.
  ParamRat(ParamPoly num, ParamPoly den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_constant().
  Rational constant_value() const;

  ParamRat operator-() const;
  friend ParamRat operator+(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator-(const ParamRat& a, const ParamRat& b);
  friend ParamRat operator*(const ParamRat& a, const ParamRat& b);
  /// Throws ZeroPolynomial on division by zero.
  friend ParamRat operator/(const ParamRat& a, const ParamRat& b);
  ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
  ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
  ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }

  bool operator==(const ParamRat&) const = default;

  ParamRat shifted(const Rational& dg, const Rational& dh) const;
  /// Throws ZeroPolynomial if the denominator vanishes at (gv, hv).
  Rational evaluate(const Rational& gv, const Rational& hv) const;

  std::string to_string() const;

 private:
  void normalize();

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace wronski
