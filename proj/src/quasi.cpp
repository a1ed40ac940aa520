#include "wronski/quasi.hpp"

#include <stdexcept>

#include "wronski/errors.hpp"

namespace wronski {

namespace {

ParamRat power_of_two(int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

// (a(1+η) - b(1-η))/2
EtaPoly exponent_factor(const AffineExp& a, const AffineExp& b) {
  const ParamPoly pa = a.to_poly();
  const ParamPoly pb = b.to_poly();
  const Rational half(1, 2);
  return EtaPoly({ParamRat((pa - pb) * half), ParamRat((pa + pb) * half)});
}

const EtaPoly& one_minus_eta_squared() {
  static const EtaPoly w({ParamRat(1), ParamRat(0), ParamRat(-1)});
  return w;
}

// Splits an exponent difference into an even integer count of sin² / cos²
// factors; throws when the difference is not of that form.
long even_gap(const AffineExp& a, const AffineExp& b) {
  const AffineExp d = a - b;
  if (!d.is_constant() || !is_integer(d.c0) || d.c0.get_num() % 2 != 0) {
    throw std::invalid_argument("quasi-rational terms with incompatible exponents");
  }
  return d.c0.get_num().get_si() / 2;
}

}  // namespace

QuasiPoly::QuasiPoly(AffineExp exp_sin, AffineExp exp_cos, EtaPoly poly)
    : exp_sin_(std::move(exp_sin)), exp_cos_(std::move(exp_cos)) {
  if (poly.is_zero()) throw ZeroPolynomial("zero Wronskian");
  EdgeFactors e = extract_edge_factors(poly);
  exp_sin_.c0 += 2 * e.minus;
  exp_cos_.c0 += 2 * e.plus;
  poly_ = e.minus + e.plus == 0 ? std::move(e.core) : e.core * power_of_two(e.minus + e.plus);
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
  // product of edge-free polynomials is edge-free: (1 ∓ η) is prime
  QuasiPoly r;
  r.exp_sin_ = a.exp_sin_ + b.exp_sin_;
  r.exp_cos_ = a.exp_cos_ + b.exp_cos_;
  r.poly_ = a.poly_ * b.poly_;
  return r;
}

QuasiPoly QuasiPoly::scaled(const ParamRat& c) const {
  if (c.is_zero()) throw ZeroPolynomial("zero Wronskian");
  QuasiPoly r(*this);
  r.poly_ = poly_ * c;
  return r;
}

QuasiPoly QuasiPoly::with_prefactor(const AffineExp& s, const AffineExp& c) const {
  QuasiPoly r(*this);
  r.exp_sin_ += s;
  r.exp_cos_ += c;
  return r;
}

QuasiPoly QuasiPoly::shifted(long dg, long dh) const {
  return QuasiPoly(exp_sin_.shifted(dg, dh), exp_cos_.shifted(dg, dh), poly_.shifted(dg, dh));
}

QuasiPoly QuasiPoly::instantiate(const ParamPoint& p) const {
  return QuasiPoly(AffineExp::constant(exp_sin_.evaluate(p.g, p.h)),
                   AffineExp::constant(exp_cos_.evaluate(p.g, p.h)), poly_.instantiate(p.g, p.h));
}

std::string QuasiPoly::to_string() const {
  return "(sin x)^(" + exp_sin_.to_string() + ") (cos x)^(" + exp_cos_.to_string() + ") [" +
         poly_.to_string() + "]";
}

QuasiRat::QuasiRat(AffineExp exp_sin, AffineExp exp_cos, EtaPoly num, EtaPoly den)
    : exp_sin_(std::move(exp_sin)), exp_cos_(std::move(exp_cos)), num_(std::move(num)),
      den_(std::move(den)) {
  canonicalize();
}

QuasiRat::QuasiRat(const QuasiPoly& q)
    : exp_sin_(q.exp_sin()), exp_cos_(q.exp_cos()), num_(q.poly()), den_(ParamRat(1)) {}

QuasiRat::QuasiRat(const RawQuasi& q) : QuasiRat(q.exp_sin, q.exp_cos, q.poly, ParamRat(1)) {}

namespace {

ParamPoly lcm(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return *(a * b).divide_exact(gcd(a, b));
}

// Multiplies num and den by the lcm of all coefficient denominators so that
// every coefficient is a polynomial in (g, h).
void clear_denominators(EtaPoly& num, EtaPoly& den) {
  ParamPoly common(1);
  for (const EtaPoly* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) {
      if (!c.is_polynomial()) common = lcm(common, c.den());
    }
  }
  if (common.is_constant()) return;
  num = num * ParamRat(common);
  den = den * ParamRat(common);
}

ParamPoly content(const EtaPoly& p, ParamPoly acc) {
  for (const auto& c : p.coeffs()) {
    if (acc.is_constant() && !acc.is_zero()) break;
    if (!c.is_zero()) acc = acc.is_zero() ? c.num().monic() : gcd(acc, c.num());
  }
  return acc;
}

}  // namespace

// Canonical form: exponents absorb every (1 -+ η) factor; num and den have
// polynomial coefficients with no common factor in η and no common factor in
// (g, h); the leading term of den's leading coefficient is 1.
void QuasiRat::canonicalize() {
  if (den_.is_zero()) throw ZeroPolynomial("quasi-rational function with zero denominator");
  if (num_.is_zero()) {
    exp_sin_ = {};
    exp_cos_ = {};
    den_ = EtaPoly(ParamRat(1));
    return;
  }
  EdgeFactors n = extract_edge_factors(num_);
  EdgeFactors d = extract_edge_factors(den_);
  exp_sin_.c0 += 2 * (n.minus - d.minus);
  exp_cos_.c0 += 2 * (n.plus - d.plus);
  num_ = n.minus + n.plus == 0 ? std::move(n.core) : n.core * power_of_two(n.minus + n.plus);
  den_ = d.minus + d.plus == 0 ? std::move(d.core) : d.core * power_of_two(d.minus + d.plus);
  if (num_.degree() > 0 && den_.degree() > 0) {
    const EtaPoly common = gcd(num_, den_);
    if (common.degree() > 0) {
      num_ = num_.divmod(common).first;
      den_ = den_.divmod(common).first;
    }
  }
  clear_denominators(num_, den_);
  const ParamPoly shared = content(num_, content(den_, ParamPoly()));
  if (!shared.is_constant()) {
    const ParamRat inv(ParamPoly(1), shared);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  const Rational lead = den_.leading().num().leading().coeff;
  if (lead != 1) {
    const ParamRat inv(Rational(1) / lead);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

QuasiRat QuasiRat::operator-() const {
  QuasiRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QuasiRat operator+(const QuasiRat& a, const QuasiRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long ks = even_gap(a.exp_sin_, b.exp_sin_);
  const long kc = even_gap(a.exp_cos_, b.exp_cos_);
  const Rational half(1, 2);
  const EtaPoly sin2 = EtaPoly::one_minus_eta() * ParamRat(half);
  const EtaPoly cos2 = EtaPoly::one_plus_eta() * ParamRat(half);
  EtaPoly an = a.num_;
  EtaPoly bn = b.num_;
  if (ks > 0) an *= sin2.pow(static_cast<int>(ks));
  if (ks < 0) bn *= sin2.pow(static_cast<int>(-ks));
  if (kc > 0) an *= cos2.pow(static_cast<int>(kc));
  if (kc < 0) bn *= cos2.pow(static_cast<int>(-kc));
  const AffineExp es = ks > 0 ? b.exp_sin_ : a.exp_sin_;
  const AffineExp ec = kc > 0 ? b.exp_cos_ : a.exp_cos_;
  if (a.den_ == b.den_) return QuasiRat(es, ec, an + bn, a.den_);
  return QuasiRat(es, ec, an * b.den_ + bn * a.den_, a.den_ * b.den_);
}

QuasiRat operator*(const QuasiRat& a, const QuasiRat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return QuasiRat(a.exp_sin_ + b.exp_sin_, a.exp_cos_ + b.exp_cos_, a.num_ * b.num_,
                  a.den_ * b.den_);
}

QuasiRat operator/(const QuasiRat& a, const QuasiRat& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero function");
  if (a.is_zero()) return {};
  return QuasiRat(a.exp_sin_ - b.exp_sin_, a.exp_cos_ - b.exp_cos_, a.num_ * b.den_,
                  a.den_ * b.num_);
}

QuasiRat QuasiRat::scaled(const ParamRat& c) const {
  if (c.is_zero()) return {};
  QuasiRat r(*this);
  r.num_ = r.num_ * c;
  return r;
}

QuasiRat QuasiRat::shifted(long dg, long dh) const {
  return QuasiRat(exp_sin_.shifted(dg, dh), exp_cos_.shifted(dg, dh), num_.shifted(dg, dh),
                  den_.shifted(dg, dh));
}

QuasiRat QuasiRat::instantiate(const ParamPoint& p) const {
  return QuasiRat(AffineExp::constant(exp_sin_.evaluate(p.g, p.h)),
                  AffineExp::constant(exp_cos_.evaluate(p.g, p.h)), num_.instantiate(p.g, p.h),
                  den_.instantiate(p.g, p.h));
}

std::string QuasiRat::to_string() const {
  return "(sin x)^(" + exp_sin_.to_string() + ") (cos x)^(" + exp_cos_.to_string() + ") [" +
         num_.to_string() + "] / [" + den_.to_string() + "]";
}

RawQuasi differentiate(const RawQuasi& q) {
  const EtaPoly lin = exponent_factor(q.exp_sin, q.exp_cos);
  return {q.exp_sin - Rational(1), q.exp_cos - Rational(1),
          lin * q.poly - one_minus_eta_squared() * q.poly.derivative()};
}

RawQuasi differentiate(const QuasiPoly& q) { return differentiate(q.raw()); }

QuasiRat differentiate(const QuasiRat& q) {
  if (q.is_zero()) return {};
  const EtaPoly lin = exponent_factor(q.exp_sin(), q.exp_cos());
  const EtaPoly& w = one_minus_eta_squared();
  const EtaPoly& n = q.num();
  const EtaPoly& d = q.den();
  EtaPoly num = (lin * n - w * n.derivative()) * d + w * n * d.derivative();
  return QuasiRat(q.exp_sin() - Rational(1), q.exp_cos() - Rational(1), std::move(num), d * d);
}

QuasiPoly canonicalize(const RawQuasi& r) { return QuasiPoly(r); }

std::optional<ParamRat> compare_quasi(const QuasiPoly& a, const QuasiPoly& b) {
  if (a.exp_sin() != b.exp_sin() || a.exp_cos() != b.exp_cos()) return std::nullopt;
  return proportional(a.poly(), b.poly());
}

}  // namespace wronski
