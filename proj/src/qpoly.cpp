#include "wronski/detail/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>

namespace wronski::detail {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

QPoly derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * static_cast<long>(k);
  trim(r);
  return r;
}

Rational evaluate(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  assert(!b.empty());
  QPoly rem(a);
  trim(rem);
  const int db = degree(b);
  if (degree(rem) < db) return {{}, rem};
  QPoly quo(rem.size() - b.size() + 1);
  const Rational inv_lead = 1 / b.back();
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Rational c = rem.back() * inv_lead;
    quo[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    rem.pop_back();  // leading term cancels exactly
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

QPoly monic(const QPoly& p) {
  if (p.empty()) return p;
  return scale(p, 1 / p.back());
}

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

std::uint64_t residue(const Integer& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

// Image of a modulo p, or nothing if p divides a denominator or the
// leading numerator.
std::optional<ModPoly> reduce_mod(const QPoly& a, std::uint64_t p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t den = residue(a[i].get_den(), p);
    if (den == 0) return std::nullopt;
    out[i] = residue(a[i].get_num(), p) * pow_mod(den, p - 2, p) % p;
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

int gcd_degree_mod(ModPoly x, ModPoly y, std::uint64_t p) {
  auto strip = [](ModPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  strip(x);
  strip(y);
  while (!y.empty()) {
    const std::uint64_t inv = pow_mod(y.back(), p - 2, p);
    while (x.size() >= y.size()) {
      const std::uint64_t q = x.back() * inv % p;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        x[shift + i] = (x[shift + i] + p - q * y[i] % p) % p;
      }
      strip(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

bool certainly_coprime(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return false;
  if (a.size() == 1 || b.size() == 1) return true;
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    auto x = reduce_mod(a, p);
    auto y = reduce_mod(b, p);
    if (!x || !y) continue;
    return gcd_degree_mod(std::move(*x), std::move(*y), p) == 0;
  }
  return false;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x(a), y(b);
  trim(x);
  trim(y);
  if (certainly_coprime(x, y)) return {Rational(1)};
  while (!y.empty()) {
    QPoly r = monic(divmod(x, y).second);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

}  // namespace wronski::detail
