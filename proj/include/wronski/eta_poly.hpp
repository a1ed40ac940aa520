#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wronski/param_rat.hpp"

namespace wronski {

/// Polynomial in η = cos 2x with ParamRat coefficients (index = power of η).
class EtaPoly {
 public:
  EtaPoly() = default;
  explicit EtaPoly(std::vector<ParamRat> coeffs);
  EtaPoly(const ParamRat& c);  // NOLINT(google-explicit-constructor)

  static EtaPoly eta();
  static EtaPoly one_minus_eta();
  static EtaPoly one_plus_eta();

  const std::vector<ParamRat>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Requires !is_zero().
  const ParamRat& leading() const { return coeffs_.back(); }
  ParamRat coeff(int k) const;
  /// True when every coefficient is a plain rational (parameters instantiated).
  bool has_constant_coeffs() const;
  /// True when every coefficient has denominator 1.
  bool has_polynomial_coeffs() const;

  EtaPoly operator-() const;
  friend EtaPoly operator+(const EtaPoly& a, const EtaPoly& b);
  friend EtaPoly operator-(const EtaPoly& a, const EtaPoly& b);
  friend EtaPoly operator*(const EtaPoly& a, const EtaPoly& b);
  friend EtaPoly operator*(const EtaPoly& a, const ParamRat& c);
  friend EtaPoly operator*(const ParamRat& c, const EtaPoly& a) { return a * c; }
  EtaPoly& operator+=(const EtaPoly& o) { return *this = *this + o; }
  EtaPoly& operator-=(const EtaPoly& o) { return *this = *this - o; }
  EtaPoly& operator*=(const EtaPoly& o) { return *this = *this * o; }

  bool operator==(const EtaPoly&) const = default;

  EtaPoly pow(int k) const;
  /// d/dη.
  EtaPoly derivative() const;
  ParamRat evaluate(const ParamRat& eta) const;
  /// Substitutes (g, h) -> (g + dg, h + dh) in every coefficient.
  EtaPoly shifted(const Rational& dg, const Rational& dh) const;
  /// Substitutes numeric parameters; the result has constant coefficients.
  EtaPoly instantiate(const Rational& gv, const Rational& hv) const;

  /// Long division over the coefficient field; divisor must be nonzero.
  std::pair<EtaPoly, EtaPoly> divmod(const EtaPoly& divisor) const;
  /// Quotient when divisor divides *this exactly, else nullopt.
  std::optional<EtaPoly> divide_exact(const EtaPoly& divisor) const;
  /// Scaled to leading coefficient 1.
  EtaPoly monic() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<ParamRat> coeffs_;
};

/// p = (1-η)^minus (1+η)^plus core, core divisible by neither factor.
struct EdgeFactors {
  int minus = 0;
  int plus = 0;
  EtaPoly core;
};

/// Throws ZeroPolynomial("zero input") for p == 0.
EdgeFactors extract_edge_factors(const EtaPoly& p);

/// c with a = c·b, or nullopt. Throws ZeroPolynomial for zero input.
std::optional<ParamRat> proportional(const EtaPoly& a, const EtaPoly& b);

/// Monic gcd over the field of ParamRat coefficients.
EtaPoly gcd(const EtaPoly& a, const EtaPoly& b);

/// Number of distinct real roots in the open interval (lo, hi).
/// Requires constant coefficients; throws ZeroPolynomial for p == 0.
int sturm_count(const EtaPoly& p, const Rational& lo, const Rational& hi);

}  // namespace wronski
