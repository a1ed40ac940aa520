#include "wronski/serialize.hpp"

#include "wronski/errors.hpp"

namespace wronski {

Json to_json(const Rational& r) { return to_fraction_string(r); }

Json to_json(const ParamPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.deg_g, t.deg_h, to_json(t.coeff)}));
  return out;
}

Json to_json(const ParamRat& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const AffineExp& e) { return {{"g", e.cg}, {"h", e.ch}, {"c", to_json(e.c0)}}; }

Json to_json(const EtaPoly& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const ParamRat c = p.coeff(k);
    if (!c.is_zero()) out.push_back(Json::array({k, to_json(c)}));
  }
  return out;
}

Json to_json(const QuasiPoly& q) {
  return {{"expS", to_json(q.exp_sin())}, {"expC", to_json(q.exp_cos())}, {"poly", to_json(q.poly())}};
}

Json to_json(const QuasiRat& q) {
  return {{"expS", to_json(q.exp_sin())},
          {"expC", to_json(q.exp_cos())},
          {"num", to_json(q.num())},
          {"den", to_json(q.den())}};
}

Json to_json(const Ledger& l) {
  return {{"dg", l.dg}, {"dh", l.dh}, {"prefS", to_json(l.pref_sin)}, {"prefC", to_json(l.pref_cos)}};
}

Json to_json(const MayaDiagram& d) {
  return {{"ascii", render_ascii(d)},
          {"leftWhite", d.left_white},
          {"rightBlack", d.right_black},
          {"offset", d.offset}};
}

Json to_json(const SpectrumLabel& s) {
  return {{"label", s.to_string()},
          {"kind", s.kind == SpectrumLabel::Kind::kBound ? "bound" : "extra"},
          {"index", s.index},
          {"level", s.level()},
          {"eigenvalue", to_json(s.eigenvalue)}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("malformed JSON: " + what); }

long int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    bad(std::string("expected integer field '") + key + "'");
  }
  return j.at(key).get<long>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

ParamPoly param_poly_from_json(const Json& j) {
  if (!j.is_array()) bad("ParamPoly must be an array");
  std::vector<ParamPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer()) {
      bad("ParamPoly term must be [i, j, \"p/q\"]");
    }
    const int i = t[0].get<int>(), k = t[1].get<int>();
    if (i < 0 || k < 0) bad("negative exponent");
    terms.push_back({i, k, rational_from_json(t[2])});
  }
  return ParamPoly::from_terms(std::move(terms));
}

ParamRat param_rat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("ParamRat needs num and den");
  try {
    return ParamRat(param_poly_from_json(j.at("num")), param_poly_from_json(j.at("den")));
  } catch (const ZeroPolynomial&) {
    bad("zero denominator");
  }
}

AffineExp affine_exp_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c")) bad("AffineExp needs g, h, c");
  return {int_field(j, "g"), int_field(j, "h"), rational_from_json(j.at("c"))};
}

EtaPoly eta_poly_from_json(const Json& j) {
  if (!j.is_array()) bad("EtaPoly must be an array");
  std::vector<ParamRat> coeffs;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<long>() < 0) {
      bad("EtaPoly entry must be [k, ParamRat]");
    }
    const auto k = t[0].get<std::size_t>();
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = coeffs[k] + param_rat_from_json(t[1]);
  }
  return EtaPoly(std::move(coeffs));
}

QuasiPoly quasi_poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("expS") || !j.contains("expC") || !j.contains("poly")) {
    bad("QuasiPoly needs expS, expC, poly");
  }
  return QuasiPoly(affine_exp_from_json(j.at("expS")), affine_exp_from_json(j.at("expC")),
                   eta_poly_from_json(j.at("poly")));
}

Ledger ledger_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("prefS") || !j.contains("prefC")) bad("Ledger fields missing");
  return {int_field(j, "dg"), int_field(j, "dh"), affine_exp_from_json(j.at("prefS")),
          affine_exp_from_json(j.at("prefC"))};
}

std::string to_latex(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  const std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

namespace {

std::string monomial_latex(int dg, int dh) {
  std::string out;
  if (dg > 0) out += dg == 1 ? "g" : "g^{" + std::to_string(dg) + "}";
  if (dh > 0) out += dh == 1 ? "h" : "h^{" + std::to_string(dh) + "}";
  return out;
}

// Appends c·m with the sign folded into the separator.
void append_term(std::string& out, const Rational& c, const std::string& m) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (m.empty() || mag != 1) out += to_latex(mag);
  out += m;
}

}  // namespace

std::string to_latex(const ParamPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) append_term(out, t.coeff, monomial_latex(t.deg_g, t.deg_h));
  return out;
}

std::string to_latex(const ParamRat& r) {
  if (r.den().is_constant()) return to_latex(r.num());
  return "\\frac{" + to_latex(r.num()) + "}{" + to_latex(r.den()) + "}";
}

std::string to_latex(const AffineExp& e) {
  std::string out;
  if (e.c0 != 0) append_term(out, e.c0, "");
  if (e.cg != 0) append_term(out, Rational(e.cg), "g");
  if (e.ch != 0) append_term(out, Rational(e.ch), "h");
  return out.empty() ? "0" : out;
}

std::string to_latex(const EtaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const ParamRat c = p.coeff(k);
    if (c.is_zero()) continue;
    const std::string power = k == 0 ? "" : k == 1 ? "\\eta" : "\\eta^{" + std::to_string(k) + "}";
    if (!out.empty()) out += " + ";
    const bool bare = c.is_constant() && c.num().constant_term() == 1 && k > 0;
    if (!bare) out += "\\left(" + to_latex(c) + "\\right)";
    out += power;
  }
  return out;
}

std::string to_latex(const QuasiPoly& q) {
  return "(\\sin x)^{" + to_latex(q.exp_sin()) + "} (\\cos x)^{" + to_latex(q.exp_cos()) +
         "} \\left[" + to_latex(q.poly()) + "\\right]";
}

}  // namespace wronski
