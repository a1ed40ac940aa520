#include "wronski/params.hpp"

#include "wronski/errors.hpp"

namespace wronski {

std::string ParamPoint::to_string() const {
  return "(g, h) = (" + to_display_string(g) + ", " + to_display_string(h) + ")";
}

ParamPoint default_generic_point() { return {Rational(37, 10), Rational(52, 7)}; }

bool is_generic(const ParamPoint& p) {
  const Rational half(1, 2);
  return !is_integer(p.g + p.h) && !is_integer(p.g - p.h) && !is_integer(p.g - half) &&
         !is_integer(p.h - half);
}

void require_generic(const ParamPoint& p) {
  if (!is_generic(p)) throw NonGenericParameters();
}

}  // namespace wronski
