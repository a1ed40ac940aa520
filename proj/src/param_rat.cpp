#include "wronski/param_rat.hpp"

#include <cassert>

#include "wronski/errors.hpp"

namespace wronski {

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroPolynomial("ParamRat with zero denominator");
  normalize();
}

void ParamRat::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.constant_term() != 1) {
      num_ *= 1 / den_.constant_term();
      den_ = ParamPoly(1);
    }
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = ParamPoly(1);
    return;
  }
  if (!num_.is_constant()) {
    const ParamPoly common = gcd(num_, den_);
    if (!common.is_constant()) {
      num_ = *num_.divide_exact(common);
      den_ = *den_.divide_exact(common);
    }
  }
  const Rational lead = den_.leading().coeff;
  if (lead != 1) {
    num_ *= 1 / lead;
    den_ *= 1 / lead;
  }
}

Rational ParamRat::constant_value() const {
  assert(is_constant());
  return num_.constant_term() / den_.constant_term();
}

ParamRat ParamRat::operator-() const {
  ParamRat r(*this);
  r.num_ = -r.num_;
  return r;
}

ParamRat operator+(const ParamRat& a, const ParamRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) return ParamRat(a.num_ + b.num_);
    return ParamRat(a.num_ + b.num_, a.den_);
  }
  return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRat operator-(const ParamRat& a, const ParamRat& b) { return a + (-b); }

ParamRat operator*(const ParamRat& a, const ParamRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return ParamRat(a.num_ * b.num_);
  return ParamRat(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRat operator/(const ParamRat& a, const ParamRat& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by zero ParamRat");
  if (a.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    if (auto q = a.num_.divide_exact(b.num_)) return ParamRat(*q);
  }
  return ParamRat(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRat ParamRat::shifted(const Rational& dg, const Rational& dh) const {
  if (is_polynomial()) return ParamRat(num_.shifted(dg, dh));
  return ParamRat(num_.shifted(dg, dh), den_.shifted(dg, dh));
}

Rational ParamRat::evaluate(const Rational& gv, const Rational& hv) const {
  const Rational d = den_.evaluate(gv, hv);
  if (d == 0) throw ZeroPolynomial("denominator vanishes at the evaluation point");
  return num_.evaluate(gv, hv) / d;
}

std::string ParamRat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wronski
