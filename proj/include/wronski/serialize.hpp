#pragma once

// JSON encodings:
//   Rational   "p/q" (integers as "n/1")
//   ParamPoly  [[i, j, "p/q"], ...]  coefficient of g^i h^j
//   ParamRat   {"num": ParamPoly, "den": ParamPoly}
//   AffineExp  {"g": int, "h": int, "c": "p/q"}
//   EtaPoly    [[k, ParamRat], ...]  by η-power, zero coefficients omitted
//   QuasiPoly  {"expS": AffineExp, "expC": AffineExp, "poly": EtaPoly}
// Decoders throw ParseError on malformed input.

#include <string>

#include <json.hpp>

#include "wronski/maya.hpp"
#include "wronski/quasi.hpp"
#include "wronski/spectral.hpp"

namespace wronski {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ParamPoly& p);
Json to_json(const ParamRat& r);
Json to_json(const AffineExp& e);
Json to_json(const EtaPoly& p);
Json to_json(const QuasiPoly& q);
Json to_json(const QuasiRat& q);
Json to_json(const Ledger& l);
Json to_json(const MayaDiagram& d);
Json to_json(const SpectrumLabel& s);

Rational rational_from_json(const Json& j);
ParamPoly param_poly_from_json(const Json& j);
ParamRat param_rat_from_json(const Json& j);
AffineExp affine_exp_from_json(const Json& j);
EtaPoly eta_poly_from_json(const Json& j);
QuasiPoly quasi_poly_from_json(const Json& j);
Ledger ledger_from_json(const Json& j);

std::string to_latex(const Rational& r);
std::string to_latex(const ParamPoly& p);
std::string to_latex(const ParamRat& r);
std::string to_latex(const AffineExp& e);
std::string to_latex(const EtaPoly& p);
std::string to_latex(const QuasiPoly& q);

}  // namespace wronski
