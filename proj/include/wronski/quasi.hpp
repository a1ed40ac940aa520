#pragma once

// Quasi-polynomials (sin x)^A (cos x)^B P(η) and their quotients.
//
// With η = cos 2x we have 1 - η = 2 sin²x and 1 + η = 2 cos²x, so factors
// (1 ∓ η) of P can always be traded for even powers of sin/cos. Canonical
// forms push every such factor into the exponents.

#include <string>

#include "wronski/affine_exp.hpp"
#include "wronski/eta_poly.hpp"
#include "wronski/params.hpp"

namespace wronski {

/// Unnormalized (sin x)^A (cos x)^B P(η); P may be divisible by 1 ∓ η or zero.
struct RawQuasi {
  AffineExp exp_sin;
  AffineExp exp_cos;
  EtaPoly poly;
};

/// Canonical (sin x)^A (cos x)^B P(η): P ≠ 0 and divisible by neither 1 - η
/// nor 1 + η.
class QuasiPoly {
 public:
  /// The constant function 1.
  QuasiPoly() : poly_(ParamRat(1)) {}
  /// Canonicalizes; throws ZeroPolynomial("zero Wronskian") when poly == 0.
  QuasiPoly(AffineExp exp_sin, AffineExp exp_cos, EtaPoly poly);
  explicit QuasiPoly(const RawQuasi& raw) : QuasiPoly(raw.exp_sin, raw.exp_cos, raw.poly) {}

  const AffineExp& exp_sin() const { return exp_sin_; }
  const AffineExp& exp_cos() const { return exp_cos_; }
  const EtaPoly& poly() const { return poly_; }
  RawQuasi raw() const { return {exp_sin_, exp_cos_, poly_}; }

  friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
  QuasiPoly scaled(const ParamRat& c) const;
  /// Multiplies by (sin x)^s (cos x)^c.
  QuasiPoly with_prefactor(const AffineExp& s, const AffineExp& c) const;
  /// (g, h) -> (g + dg, h + dh) in exponents and coefficients.
  QuasiPoly shifted(long dg, long dh) const;
  /// Numeric parameters; exponents become constants.
  QuasiPoly instantiate(const ParamPoint& p) const;

  bool operator==(const QuasiPoly&) const = default;
  std::string to_string() const;

 private:
  AffineExp exp_sin_;
  AffineExp exp_cos_;
  EtaPoly poly_;
};

/// Quotient (sin x)^A (cos x)^B N(η)/D(η), canonical: N and D free of
/// 1 ∓ η factors, gcd(N, D) = 1 over the coefficient field, D monic.
/// The zero function has exponents 0 and D = 1.
class QuasiRat {
 public:
  QuasiRat() : den_(ParamRat(1)) {}
  QuasiRat(AffineExp exp_sin, AffineExp exp_cos, EtaPoly num, EtaPoly den);
  QuasiRat(const QuasiPoly& q);  // NOLINT(google-explicit-constructor)
  QuasiRat(const RawQuasi& q);   // NOLINT(google-explicit-constructor)

  const AffineExp& exp_sin() const { return exp_sin_; }
  const AffineExp& exp_cos() const { return exp_cos_; }
  const EtaPoly& num() const { return num_; }
  const EtaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QuasiRat operator-() const;
  /// Sum of terms whose exponents differ by even integers; throws
  /// std::invalid_argument otherwise.
  friend QuasiRat operator+(const QuasiRat& a, const QuasiRat& b);
  friend QuasiRat operator-(const QuasiRat& a, const QuasiRat& b) { return a + (-b); }
  friend QuasiRat operator*(const QuasiRat& a, const QuasiRat& b);
  friend QuasiRat operator/(const QuasiRat& a, const QuasiRat& b);
  QuasiRat scaled(const ParamRat& c) const;

  bool operator==(const QuasiRat&) const = default;

  QuasiRat shifted(long dg, long dh) const;
  QuasiRat instantiate(const ParamPoint& p) const;

  std::string to_string() const;

 private:
  void canonicalize();

  AffineExp exp_sin_;
  AffineExp exp_cos_;
  EtaPoly num_;
  EtaPoly den_;
};

/// d/dx of (sin x)^a (cos x)^b Q(η):
///   (sin x)^(a-1) (cos x)^(b-1) [ (a(1+η) - b(1-η))/2 · Q - (1-η²) Q' ].
RawQuasi differentiate(const RawQuasi& q);
RawQuasi differentiate(const QuasiPoly& q);
/// Quotient rule applied on top of the quasi-polynomial rule.
QuasiRat differentiate(const QuasiRat& q);

/// Folds (1 ∓ η) factors of r.poly into the exponents.
/// Throws ZeroPolynomial("zero Wronskian") when r.poly == 0.
QuasiPoly canonicalize(const RawQuasi& r);

/// c with a = c·b, or nullopt (exponents must agree exactly).
std::optional<ParamRat> compare_quasi(const QuasiPoly& a, const QuasiPoly& b);

}  // namespace wronski
