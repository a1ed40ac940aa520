#include "wronski/param_poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "wronski/detail/qpoly.hpp"

namespace wronski {

namespace {

struct MonomialOrder {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    return monomial_before(a.first, a.second, b.first, b.second);
  }
};

using TermMap = std::map<std::pair<int, int>, Rational, MonomialOrder>;

ParamPoly from_map(TermMap&& m) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(m.size());
  for (auto& [mono, c] : m) {
    if (c != 0) terms.push_back({mono.first, mono.second, std::move(c)});
  }
  return ParamPoly::from_terms(std::move(terms));
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// (x + a)^n expanded: coefficient of x^k at index k.
std::vector<Rational> shifted_power(const Rational& a, int n) {
  std::vector<Rational> out(n + 1);
  Rational apow = 1;
  for (int k = n; k >= 0; --k) {
    out[k] = Rational(binomial(n, k)) * apow;
    apow *= a;
  }
  return out;
}

// Recursive view: rec[i] = coefficient of g^i as a dense polynomial in h.
using Rec = std::vector<detail::QPoly>;

Rec to_rec(const ParamPoly& p) {
  Rec rec(p.is_zero() ? 0 : p.degree_g() + 1);
  for (const auto& t : p.terms()) {
    auto& row = rec[t.deg_g];
    if (static_cast<int>(row.size()) <= t.deg_h) row.resize(t.deg_h + 1);
    row[t.deg_h] += t.coeff;
  }
  for (auto& row : rec) detail::trim(row);
  return rec;
}

ParamPoly from_rec(const Rec& rec) {
  std::vector<ParamPoly::Term> terms;
  for (std::size_t i = 0; i < rec.size(); ++i) {
    for (std::size_t j = 0; j < rec[i].size(); ++j) {
      if (rec[i][j] != 0) terms.push_back({static_cast<int>(i), static_cast<int>(j), rec[i][j]});
    }
  }
  return ParamPoly::from_terms(std::move(terms));
}

void trim_rec(Rec& r) {
  while (!r.empty() && r.back().empty()) r.pop_back();
}

detail::QPoly rec_content(const Rec& r) {
  detail::QPoly c;
  for (const auto& row : r) {
    c = detail::gcd(c, row);
    if (c.size() == 1) break;  // unit
  }
  return c;
}

Rec rec_divide_content(const Rec& r, const detail::QPoly& c) {
  Rec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].empty()) continue;
    auto [q, rem] = detail::divmod(r[i], c);
    assert(rem.empty());
    out[i] = std::move(q);
  }
  return out;
}

Rec rec_primitive(const Rec& r) {
  if (r.empty()) return r;
  return rec_divide_content(r, rec_content(r));
}

// Pseudo-remainder in g with coefficients in Q[h].
Rec rec_prem(Rec a, const Rec& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const detail::QPoly& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const detail::QPoly la = a.back();
    for (auto& row : a) row = detail::mul(row, lb);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = detail::sub(a[shift + i], detail::mul(la, b[i]));
    }
    assert(a.back().empty());
    trim_rec(a);
  }
  return a;
}

ParamPoly swap_variables(const ParamPoly& p) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({t.deg_h, t.deg_g, t.coeff});
  return ParamPoly::from_terms(std::move(terms));
}

// True when gcd(a, b) is certified to have degree 0 in g: the images at some
// h = h0 that keeps a's leading coefficient are coprime.
bool gcd_free_of_g(const Rec& a, const Rec& b) {
  if (a.size() <= 1 || b.size() <= 1) return true;
  static const Rational probes[] = {Rational(52, 7), Rational(113, 17), Rational(-29, 11)};
  for (const Rational& h0 : probes) {
    detail::QPoly ua, ub;
    for (const auto& row : a) ua.push_back(detail::evaluate(row, h0));
    if (ua.back() == 0) continue;
    for (const auto& row : b) ub.push_back(detail::evaluate(row, h0));
    detail::trim(ub);
    if (ub.empty()) continue;
    return detail::certainly_coprime(ua, ub);
  }
  return false;
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({0, 0, c});
    terms_.back().coeff.canonicalize();
  }
}

ParamPoly ParamPoly::g() { return monomial(1, 0, 1); }
ParamPoly ParamPoly::h() { return monomial(0, 1, 1); }

ParamPoly ParamPoly::monomial(int deg_g, int deg_h, const Rational& coeff) {
  ParamPoly p;
  if (coeff != 0) {
    p.terms_.push_back({deg_g, deg_h, coeff});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return monomial_before(a.deg_g, a.deg_h, b.deg_g, b.deg_h);
  });
  ParamPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().deg_g == t.deg_g && p.terms_.back().deg_h == t.deg_h) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].deg_g == 0 && terms_[0].deg_h == 0);
}

Rational ParamPoly::constant_term() const { return coeff(0, 0); }

Rational ParamPoly::coeff(int deg_g, int deg_h) const {
  for (const auto& t : terms_) {
    if (t.deg_g == deg_g && t.deg_h == deg_h) return t.coeff;
  }
  return 0;
}

int ParamPoly::degree_g() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.deg_g);
  return d;
}

int ParamPoly::degree_h() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.deg_h);
  return d;
}

int ParamPoly::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().deg_g + terms_.front().deg_h;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() && monomial_before(a->deg_g, a->deg_h, b->deg_g, b->deg_h))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() ||
               monomial_before(b->deg_g, b->deg_h, a->deg_g, a->deg_h)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->deg_g, a->deg_h, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].coeff;
  if (a.is_constant()) return b * a.terms_[0].coeff;
  TermMap acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      acc[{x.deg_g + y.deg_g, x.deg_h + y.deg_h}] += x.coeff * y.coeff;
    }
  }
  return from_map(std::move(acc));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  *this = *this * o;
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

ParamPoly ParamPoly::pow(int k) const {
  assert(k >= 0);
  ParamPoly result(1);
  ParamPoly base(*this);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

ParamPoly ParamPoly::shifted(const Rational& dg, const Rational& dh) const {
  if (dg == 0 && dh == 0) return *this;
  TermMap acc;
  for (const auto& t : terms_) {
    const auto pg = shifted_power(dg, t.deg_g);
    const auto ph = shifted_power(dh, t.deg_h);
    for (int i = 0; i <= t.deg_g; ++i) {
      if (pg[i] == 0) continue;
      for (int j = 0; j <= t.deg_h; ++j) {
        if (ph[j] == 0) continue;
        acc[{i, j}] += t.coeff * pg[i] * ph[j];
      }
    }
  }
  return from_map(std::move(acc));
}

Rational ParamPoly::evaluate(const Rational& gv, const Rational& hv) const {
  // Horner in g over rows of h-polynomials.
  const Rec rec = to_rec(*this);
  Rational acc = 0;
  for (auto it = rec.rbegin(); it != rec.rend(); ++it) acc = acc * gv + detail::evaluate(*it, hv);
  return acc;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  assert(!divisor.is_zero());
  if (is_zero()) return ParamPoly{};
  if (divisor.is_constant()) return *this * (1 / divisor.terms_[0].coeff);
  const Term& lead = divisor.leading();
  ParamPoly rem(*this);
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (lt.deg_g < lead.deg_g || lt.deg_h < lead.deg_h) return std::nullopt;
    Term q{lt.deg_g - lead.deg_g, lt.deg_h - lead.deg_h, lt.coeff / lead.coeff};
    rem -= divisor * ParamPoly::monomial(q.deg_g, q.deg_h, q.coeff);
    quotient.push_back(std::move(q));
  }
  return ParamPoly::from_terms(std::move(quotient));
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading().coeff);
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    const bool has_var = t.deg_g > 0 || t.deg_h > 0;
    if (!has_var || c != 1) {
      out << c.get_str();
      if (has_var) out << "*";
    }
    if (t.deg_g > 0) {
      out << "g";
      if (t.deg_g > 1) out << "^" << t.deg_g;
      if (t.deg_h > 0) out << "*";
    }
    if (t.deg_h > 0) {
      out << "h";
      if (t.deg_h > 1) out << "^" << t.deg_h;
    }
  }
  return out.str();
}

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  Rec ra = to_rec(a);
  Rec rb = to_rec(b);
  const bool free_g = gcd_free_of_g(ra, rb);
  const Rec sa = to_rec(swap_variables(a));
  const Rec sb = to_rec(swap_variables(b));
  const bool free_h = gcd_free_of_g(sa, sb);
  if (free_g && free_h) return ParamPoly(1);
  if (free_g) return from_rec({detail::gcd(rec_content(ra), rec_content(rb))}).monic();
  if (free_h) {
    return swap_variables(from_rec({detail::gcd(rec_content(sa), rec_content(sb))})).monic();
  }
  const detail::QPoly content = detail::gcd(rec_content(ra), rec_content(rb));
  ra = rec_primitive(ra);
  rb = rec_primitive(rb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  while (!rb.empty()) {
    Rec r = rec_prem(ra, rb);
    ra = std::move(rb);
    rb = rec_primitive(r);
  }
  Rec result;
  if (ra.size() <= 1) {
    result = {content};
  } else {
    result = ra;
    for (auto& row : result) row = detail::mul(row, content);
  }
  return from_rec(result).monic();
}

}  // namespace wronski
