#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wronski/rational.hpp"

namespace wronski {

/// Polynomial in the two Pöschl–Teller parameters (g, h) over Q.
///
/// Terms are kept sorted in graded-lexicographic order, largest monomial
/// first (total degree, then degree in g), with no zero coefficients, so
/// two equal polynomials are equal member-by-member.
class ParamPoly {
 public:
  struct Term {
    int deg_g = 0;
    int deg_h = 0;
    Rational coeff;

    bool operator==(const Term&) const = default;
  };

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static ParamPoly g();
  static ParamPoly h();
  static ParamPoly monomial(int deg_g, int deg_h, const Rational& coeff);
  /// Merges duplicates, drops zeros and sorts.
  static ParamPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of g^0 h^0.
  Rational constant_term() const;
  Rational coeff(int deg_g, int deg_h) const;
  /// Leading term under the canonical order; requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  int degree_g() const;
  int degree_h() const;
  int total_degree() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }

  bool operator==(const ParamPoly&) const = default;

  ParamPoly pow(int k) const;
  /// p(g + dg, h + dh).
  ParamPoly shifted(const Rational& dg, const Rational& dh) const;
  Rational evaluate(const Rational& gv, const Rational& hv) const;

  /// q with *this = q * divisor, or nullopt when divisor does not divide.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  ParamPoly monic() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor over Q[g, h]; gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

/// Canonical monomial order: true when (ag, ah) comes before (bg, bh).
inline bool monomial_before(int ag, int ah, int bg, int bh) {
  if (ag + ah != bg + bh) return ag + ah > bg + bh;
  return ag > bg;
}

}  // namespace wronski
