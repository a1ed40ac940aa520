#pragma once

#include <string>

#include "wronski/rational.hpp"

namespace wronski {

/// A numeric instantiation of the parameters (g, h).
struct ParamPoint {
  Rational g;
  Rational h;

  ParamPoint shifted(long dg, long dh) const { return {g + dg, h + dh}; }
  bool operator==(const ParamPoint&) const = default;
  std::string to_string() const;
};

/// (37/10, 52/7): satisfies every genericity condition and is the default
/// instantiation for checks that are too expensive symbolically.
ParamPoint default_generic_point();

/// g ± h ∉ Z and g, h ∉ Z + 1/2.
bool is_generic(const ParamPoint& p);

/// Throws NonGenericParameters("excluded parameter values") unless generic.
void require_generic(const ParamPoint& p);

}  // namespace wronski
