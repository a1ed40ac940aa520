#pragma once

#include <doctest.h>

#include <optional>
#include <string>

#include "wronski/maya.hpp"
#include "wronski/quasi.hpp"
#include "wronski/states.hpp"

namespace doctest {

template <>
struct StringMaker<wronski::Rational> {
  static String convert(const wronski::Rational& r) { return r.get_str().c_str(); }
};

#define WRONSKI_PRINTABLE(T)                                                  \
  template <>                                                                 \
  struct StringMaker<T> {                                                     \
    static String convert(const T& v) { return v.to_string().c_str(); }       \
  };                                                                          \
  template <>                                                                  \
  struct StringMaker<std::optional<T>> {                                      \
    static String convert(const std::optional<T>& v) {                        \
      return v ? v->to_string().c_str() : "nullopt";                          \
    }                                                                         \
  };

WRONSKI_PRINTABLE(wronski::ParamPoly)
WRONSKI_PRINTABLE(wronski::ParamRat)
WRONSKI_PRINTABLE(wronski::AffineExp)
WRONSKI_PRINTABLE(wronski::EtaPoly)
WRONSKI_PRINTABLE(wronski::QuasiPoly)
WRONSKI_PRINTABLE(wronski::QuasiRat)
WRONSKI_PRINTABLE(wronski::StateTuple)
WRONSKI_PRINTABLE(wronski::Ledger)

#undef WRONSKI_PRINTABLE

}  // namespace doctest
