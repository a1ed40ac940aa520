#include "wronski/affine_exp.hpp"

#include <sstream>

namespace wronski {

ParamPoly AffineExp::to_poly() const {
  return ParamPoly::monomial(1, 0, cg) + ParamPoly::monomial(0, 1, ch) + ParamPoly(c0);
}

std::string AffineExp::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const Rational& c, const char* var) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (*var == '\0' || mag != 1) out << mag.get_str();
    out << var;
  };
  emit(c0, "");
  emit(Rational(cg), "g");
  emit(Rational(ch), "h");
  if (first) return "0";
  return out.str();
}

}  // namespace wronski
