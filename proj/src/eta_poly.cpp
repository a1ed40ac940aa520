#include "wronski/eta_poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "wronski/detail/qpoly.hpp"
#include "wronski/errors.hpp"

namespace wronski {

namespace {

detail::QPoly to_qpoly(const EtaPoly& p) {
  detail::QPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!c.is_constant()) throw std::invalid_argument("EtaPoly has symbolic coefficients");
    out.push_back(c.constant_value());
  }
  return out;
}

EtaPoly from_qpoly(const detail::QPoly& q) {
  std::vector<ParamRat> c;
  c.reserve(q.size());
  for (const auto& x : q) c.emplace_back(x);
  return EtaPoly(std::move(c));
}

// Polynomial-coefficient view used by the primitive remainder sequence.
using PolyRow = std::vector<ParamPoly>;

void trim_row(PolyRow& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

PolyRow clear_denominators(const EtaPoly& p) {
  ParamPoly common(1);
  for (const auto& c : p.coeffs()) {
    if (c.is_polynomial()) continue;
    const ParamPoly g = gcd(common, c.den());
    common = *(common * c.den()).divide_exact(g);
  }
  PolyRow out;
  for (const auto& c : p.coeffs()) {
    out.push_back(*(c.num() * common).divide_exact(c.den()));
  }
  return out;
}

PolyRow primitive_part(const PolyRow& r) {
  ParamPoly content;
  for (const auto& c : r) {
    content = gcd(content, c);
    if (content.is_constant()) break;
  }
  if (content.is_constant()) {
    // scale by the leading rational only, so rows stay small
    const Rational lead = r.back().leading().coeff;
    PolyRow out(r);
    for (auto& c : out) c *= 1 / lead;
    return out;
  }
  PolyRow out;
  out.reserve(r.size());
  for (const auto& c : r) out.push_back(*c.divide_exact(content));
  return out;
}

PolyRow pseudo_remainder(PolyRow a, const PolyRow& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const ParamPoly& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const ParamPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    assert(a.back().is_zero());
    trim_row(a);
  }
  return a;
}

int sign_changes(const std::vector<detail::QPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(detail::evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

EtaPoly::EtaPoly(std::vector<ParamRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EtaPoly::EtaPoly(const ParamRat& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

EtaPoly EtaPoly::eta() { return EtaPoly({ParamRat(0), ParamRat(1)}); }
EtaPoly EtaPoly::one_minus_eta() { return EtaPoly({ParamRat(1), ParamRat(-1)}); }
EtaPoly EtaPoly::one_plus_eta() { return EtaPoly({ParamRat(1), ParamRat(1)}); }

void EtaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ParamRat EtaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[k];
}

bool EtaPoly::has_constant_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ParamRat& c) { return c.is_constant(); });
}

bool EtaPoly::has_polynomial_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ParamRat& c) { return c.is_polynomial(); });
}

EtaPoly EtaPoly::operator-() const {
  EtaPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EtaPoly operator+(const EtaPoly& a, const EtaPoly& b) {
  std::vector<ParamRat> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.coeffs_.size() && i < b.coeffs_.size()) {
      r[i] = a.coeffs_[i] + b.coeffs_[i];
    } else {
      r[i] = i < a.coeffs_.size() ? a.coeffs_[i] : b.coeffs_[i];
    }
  }
  return EtaPoly(std::move(r));
}

EtaPoly operator-(const EtaPoly& a, const EtaPoly& b) { return a + (-b); }

EtaPoly operator*(const EtaPoly& a, const EtaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ParamRat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return EtaPoly(std::move(r));
}

EtaPoly operator*(const EtaPoly& a, const ParamRat& c) {
  if (c.is_zero()) return {};
  EtaPoly r(a);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

EtaPoly EtaPoly::pow(int k) const {
  assert(k >= 0);
  EtaPoly result(ParamRat(1));
  for (int i = 0; i < k; ++i) result *= *this;
  return result;
}

EtaPoly EtaPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ParamRat> r(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    r[k - 1] = coeffs_[k] * ParamRat(static_cast<long>(k));
  }
  return EtaPoly(std::move(r));
}

ParamRat EtaPoly::evaluate(const ParamRat& eta) const {
  ParamRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * eta + *it;
  return acc;
}

EtaPoly EtaPoly::shifted(const Rational& dg, const Rational& dh) const {
  if (dg == 0 && dh == 0) return *this;
  std::vector<ParamRat> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.push_back(c.shifted(dg, dh));
  return EtaPoly(std::move(r));
}

EtaPoly EtaPoly::instantiate(const Rational& gv, const Rational& hv) const {
  std::vector<ParamRat> r;
  r.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.emplace_back(c.evaluate(gv, hv));
  return EtaPoly(std::move(r));
}

std::pair<EtaPoly, EtaPoly> EtaPoly::divmod(const EtaPoly& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("division by zero EtaPoly");
  std::vector<ParamRat> rem(coeffs_);
  const int db = divisor.degree();
  if (degree() < db) return {EtaPoly{}, *this};
  std::vector<ParamRat> quo(coeffs_.size() - divisor.coeffs_.size() + 1);
  const ParamRat& lead = divisor.leading();
  while (static_cast<int>(rem.size()) - 1 >= db) {
    if (rem.back().is_zero()) {
      rem.pop_back();
      continue;
    }
    const int shift = static_cast<int>(rem.size()) - 1 - db;
    const ParamRat c = rem.back() / lead;
    for (int i = 0; i < db; ++i) rem[shift + i] -= c * divisor.coeffs_[i];
    rem.pop_back();
    quo[shift] = c;
  }
  return {EtaPoly(std::move(quo)), EtaPoly(std::move(rem))};
}

std::optional<EtaPoly> EtaPoly::divide_exact(const EtaPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

EtaPoly EtaPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (ParamRat(1) / leading());
}

std::string EtaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[k].to_string() << ")";
    if (k > 0) out << "*eta";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

EdgeFactors extract_edge_factors(const EtaPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("zero input");
  EdgeFactors out{0, 0, p};
  // (1 - η) | p  <=>  p(1) = 0;  synthetic division by (η - 1), then negate.
  while (out.core.degree() > 0 && out.core.evaluate(ParamRat(1)).is_zero()) {
    const auto& a = out.core.coeffs();
    std::vector<ParamRat> q(a.size() - 1);
    ParamRat carry;
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
      carry = a[k] + carry;
      q[k - 1] = -carry;
    }
    out.core = EtaPoly(std::move(q));
    ++out.minus;
  }
  while (out.core.degree() > 0 && out.core.evaluate(ParamRat(-1)).is_zero()) {
    const auto& a = out.core.coeffs();
    std::vector<ParamRat> q(a.size() - 1);
    ParamRat carry;
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
      carry = a[k] - carry;
      q[k - 1] = carry;
    }
    out.core = EtaPoly(std::move(q));
    ++out.plus;
  }
  return out;
}

std::optional<ParamRat> proportional(const EtaPoly& a, const EtaPoly& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("zero input");
  if (a.degree() != b.degree()) return std::nullopt;
  if (a * b.leading() != b * a.leading()) return std::nullopt;
  return a.leading() / b.leading();
}

EtaPoly gcd(const EtaPoly& a, const EtaPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return EtaPoly(ParamRat(1));
  if (a.has_constant_coeffs() && b.has_constant_coeffs()) {
    return from_qpoly(detail::gcd(to_qpoly(a), to_qpoly(b)));
  }
  // Coprime images at a point that keeps a's leading coefficient certify a
  // trivial gcd over Q(g, h).
  static const std::pair<Rational, Rational> probes[] = {
      {Rational(37, 10), Rational(52, 7)}, {Rational(113, 17), Rational(71, 13)}};
  for (const auto& [gv, hv] : probes) {
    const EtaPoly ia = a.instantiate(gv, hv);
    if (ia.degree() != a.degree()) continue;
    const EtaPoly ib = b.instantiate(gv, hv);
    if (ib.is_zero()) continue;
    if (detail::certainly_coprime(to_qpoly(ia), to_qpoly(ib))) return EtaPoly(ParamRat(1));
    break;
  }
  PolyRow x = primitive_part(clear_denominators(a));
  PolyRow y = primitive_part(clear_denominators(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    PolyRow r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(r);
  }
  if (x.size() <= 1) return EtaPoly(ParamRat(1));
  std::vector<ParamRat> c;
  c.reserve(x.size());
  for (auto& p : x) c.emplace_back(std::move(p));
  return EtaPoly(std::move(c)).monic();
}

int sturm_count(const EtaPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("zero polynomial");
  detail::QPoly q = to_qpoly(p);
  // strip roots sitting exactly on the endpoints; they are outside (lo, hi)
  for (const Rational& end : {lo, hi}) {
    while (detail::degree(q) > 0 && detail::evaluate(q, end) == 0) {
      q = detail::divmod(q, detail::QPoly{-end, Rational(1)}).first;
    }
  }
  if (detail::degree(q) <= 0) return 0;
  std::vector<detail::QPoly> chain{q, detail::derivative(q)};
  while (detail::degree(chain.back()) > 0) {
    detail::QPoly r = detail::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    chain.push_back(detail::scale(r, -1));
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace wronski
