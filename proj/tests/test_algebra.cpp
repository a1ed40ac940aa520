#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support/generators.hpp"
#include "support/printers.hpp"
#include "wronski/errors.hpp"
#include "wronski/eta_poly.hpp"
#include "wronski/param_rat.hpp"
#include "wronski/rational.hpp"

using namespace wronski;

namespace {

const ParamPoly G = ParamPoly::g();
const ParamPoly H = ParamPoly::h();
const EtaPoly ETA = EtaPoly::eta();

ParamPoly leading_product() {
  return (G - H + ParamPoly(2)) * (G - H - ParamPoly(1)) * (G - H - ParamPoly(3)) *
         (G - H - ParamPoly(4)) * (G + H - ParamPoly(3));
}

EtaPoly from_roots(const std::vector<Rational>& roots) {
  EtaPoly p(ParamRat(1));
  for (const auto& r : roots) p = p * (ETA - EtaPoly(ParamRat(r)));
  return p;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(to_fraction_string(Rational(-4)) == "-4/1");
  CHECK(to_fraction_string(testgen::q(6, 4)) == "3/2");
  CHECK(to_display_string(Rational(5)) == "5");
  for (const char* bad : {"", "1/0", "abc", "1//2", "1/2/3", "+", "2.5", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("parameter polynomial arithmetic") {
  CHECK((G + H) * (G - H) == G * G - H * H);
  CHECK((ParamPoly(2) * G - ParamPoly(1)) + ParamPoly() == ParamPoly(2) * G - ParamPoly(1));
  CHECK((G - G).is_zero());

  const ParamPoly p = leading_product();
  CHECK(p.total_degree() == 5);
  CHECK(p.coeff(5, 0) == 1);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    const Rational a = testgen::small_rational(rng, 20, 7), b = testgen::small_rational(rng, 20, 7);
    const Rational direct = (a - b + 2) * (a - b - 1) * (a - b - 3) * (a - b - 4) * (a + b - 3);
    CHECK(p.evaluate(a, b) == direct);
  }
}

TEST_CASE("parameter shift and evaluation") {
  CHECK((ParamPoly(2) * G - ParamPoly(1)).shifted(-1, 0) == ParamPoly(2) * G - ParamPoly(3));
  for (int n = 0; n <= 4; ++n) {
    const ParamPoly e = ParamPoly(4 * n) * (ParamPoly(n) + G + H);
    CHECK(e.shifted(1, -1) == e);
  }
  const Rational v(3);
  const ParamPoly e1 = ParamPoly(-4) * (G + ParamPoly(v + Rational(1, 2))) *
                       (H - ParamPoly(v + Rational(1, 2)));
  const ParamPoly direct = ParamPoly(-4) * (G + ParamPoly(1) + ParamPoly(v + Rational(1, 2))) *
                           (H - ParamPoly(1) - ParamPoly(v + Rational(1, 2)));
  CHECK(e1.shifted(1, -1) == direct);

  CHECK((G + H).evaluate(Rational(1, 2), Rational(1, 2)) == 1);
  CHECK((G * G - H * H).evaluate(3, 2) == 5);
  const Rational g(37, 10), h(52, 7);
  const Rational factors = (g - h + 2) * (g - h - 1) * (g - h - 3) * (g - h - 4) * (g + h - 3);
  CHECK(leading_product().evaluate(g, h) == factors);
}

TEST_CASE("ring axioms hold structurally") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const ParamPoly p = testgen::random_param_poly(rng);
    const ParamPoly q = testgen::random_param_poly(rng);
    const ParamPoly r = testgen::random_param_poly(rng);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == ParamPoly());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const ParamPoly p = testgen::random_param_poly(rng, 3, 4);
    const ParamPoly q = testgen::random_param_poly(rng, 3, 4);
    const Rational a = testgen::small_rational(rng), b = testgen::small_rational(rng);
    CHECK((p * q).evaluate(a, b) == p.evaluate(a, b) * q.evaluate(a, b));
    CHECK((p + q).evaluate(a, b) == p.evaluate(a, b) + q.evaluate(a, b));
  }
}

TEST_CASE("shift composes and commutes with evaluation") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const ParamPoly p = testgen::random_param_poly(rng, 3, 4);
    const int dg = testgen::uniform(rng, -3, 3), dh = testgen::uniform(rng, -3, 3);
    const Rational a = testgen::small_rational(rng), b = testgen::small_rational(rng);
    CHECK(p.shifted(dg, dh).evaluate(a, b) == p.evaluate(a + dg, b + dh));
    CHECK(p.shifted(dg, 0).shifted(0, dh) == p.shifted(dg, dh));
  }
}

TEST_CASE("bivariate gcd and exact division") {
  const ParamPoly a = (G - ParamPoly(1)) * (H + ParamPoly(2));
  const ParamPoly b = (G - ParamPoly(1)) * (G + H);
  CHECK(gcd(a, b) == G - ParamPoly(1));
  CHECK(gcd(G + H, G - H) == ParamPoly(1));
  CHECK(gcd(ParamPoly(), ParamPoly()).is_zero());
  CHECK(a.divide_exact(H + ParamPoly(2)) == G - ParamPoly(1));
  CHECK_FALSE(a.divide_exact(G + H).has_value());

  std::mt19937_64 rng(4);
  for (int k = 0; k < 30; ++k) {
    const ParamPoly c = testgen::nonzero_param_poly(rng, 2, 3);
    const ParamPoly x = testgen::nonzero_param_poly(rng, 2, 3) * c;
    const ParamPoly y = testgen::nonzero_param_poly(rng, 2, 3) * c;
    const ParamPoly d = gcd(x, y);
    CHECK(x.divide_exact(d).has_value());
    CHECK(y.divide_exact(d).has_value());
    CHECK(d.divide_exact(c.monic()).has_value());
    CHECK(d.leading().coeff == 1);
  }
}

TEST_CASE("parameter rationals are reduced with normalized denominators") {
  const ParamRat r((G * G - ParamPoly(1)), G - ParamPoly(1));
  CHECK(r == ParamRat(G + ParamPoly(1)));
  CHECK(r.is_polynomial());
  CHECK(ParamRat(ParamPoly(2) * G, ParamPoly(4) * H) == ParamRat(G, ParamPoly(2) * H));
  CHECK(ParamRat(-G, -H) == ParamRat(G, H));
  CHECK_THROWS_AS(ParamRat(G, ParamPoly()), ZeroPolynomial);
  CHECK_THROWS_AS(ParamRat(G) / ParamRat(), ZeroPolynomial);

  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const ParamRat x = testgen::random_param_rat(rng), y = testgen::random_param_rat(rng);
    CHECK((x + y) - y == x);
    CHECK((x * y) / y == x);
    CHECK(x.den().leading().coeff == 1);
  }
}

TEST_CASE("eta polynomial arithmetic") {
  CHECK(ETA.pow(2).derivative() == ETA * ParamRat(2));
  CHECK(EtaPoly::one_minus_eta() * EtaPoly::one_plus_eta() == EtaPoly(ParamRat(1)) - ETA.pow(2));
  CHECK(EtaPoly().degree() == -1);

  std::mt19937_64 rng(6);
  const ParamRat at(Rational(2, 3));
  for (int k = 0; k < 30; ++k) {
    const EtaPoly a = testgen::random_eta_poly(rng, 3), b = testgen::random_eta_poly(rng, 3);
    const EtaPoly ab = a * b;
    CHECK(ab.degree() == 6);
    CHECK(ab.evaluate(at) == a.evaluate(at) * b.evaluate(at));
    const auto [q, r] = ab.divmod(b);
    CHECK(r.is_zero());
    CHECK(q == a);
    CHECK(ab.divide_exact(a) == b);
  }
}

TEST_CASE("edge factors") {
  const EtaPoly core = ETA + EtaPoly(ParamRat(2));
  const EdgeFactors e1 = extract_edge_factors(EtaPoly::one_minus_eta().pow(2) * core);
  CHECK(e1.minus == 2);
  CHECK(e1.plus == 0);
  CHECK(e1.core == core);
  const EdgeFactors e2 = extract_edge_factors(core);
  CHECK(e2.minus == 0);
  CHECK(e2.plus == 0);
  CHECK(e2.core == core);
  CHECK_THROWS_WITH_AS(extract_edge_factors(EtaPoly()), "zero input", ZeroPolynomial);

  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const EtaPoly p = testgen::random_eta_poly(rng, 3);
    const int m = testgen::uniform(rng, 0, 3), n = testgen::uniform(rng, 0, 3);
    const EtaPoly input = EtaPoly::one_minus_eta().pow(m) * EtaPoly::one_plus_eta().pow(n) * p;
    const EdgeFactors e = extract_edge_factors(input);
    CHECK(EtaPoly::one_minus_eta().pow(e.minus) * EtaPoly::one_plus_eta().pow(e.plus) * e.core ==
          input);
    CHECK(e.minus >= m);
    CHECK(e.plus >= n);
    CHECK_FALSE(e.core.divide_exact(EtaPoly::one_minus_eta()).has_value());
    CHECK_FALSE(e.core.divide_exact(EtaPoly::one_plus_eta()).has_value());
  }
}

TEST_CASE("proportionality of eta polynomials") {
  std::mt19937_64 rng(8);
  const EtaPoly p = testgen::random_eta_poly(rng, 3);
  CHECK(proportional(p * ParamRat(2), p) == ParamRat(2));
  const ParamRat c(G - ParamPoly(1), H + ParamPoly(1));
  CHECK(proportional(p * ParamRat(G - ParamPoly(1)), p * ParamRat(H + ParamPoly(1))) == c);
  CHECK_FALSE(proportional(p, p + ETA * ParamRat(G)).has_value());
  CHECK_THROWS_AS(proportional(EtaPoly(), p), ZeroPolynomial);

  for (int k = 0; k < 30; ++k) {
    const EtaPoly a = testgen::random_eta_poly(rng, 2);
    const ParamRat s = testgen::random_param_rat(rng);
    CHECK(proportional(a * s, a) == s);
  }
}

TEST_CASE("Sturm root counting") {
  const EtaPoly quarter = ETA.pow(2) - EtaPoly(ParamRat(Rational(1, 4)));
  CHECK(sturm_count(quarter, -1, 1) == 2);
  CHECK(sturm_count(ETA.pow(2) + EtaPoly(ParamRat(1)), -1, 1) == 0);
  CHECK(sturm_count(from_roots({Rational(1, 3), Rational(5)}), -1, 1) == 1);
  CHECK(sturm_count(from_roots({Rational(1), Rational(-1)}), -1, 1) == 0);
  CHECK(sturm_count(from_roots({Rational(1, 2), Rational(1, 2), Rational(-1, 5)}), -1, 1) == 2);
  CHECK_THROWS_AS(sturm_count(EtaPoly(), -1, 1), ZeroPolynomial);

  std::mt19937_64 rng(9);
  for (int k = 0; k < 60; ++k) {
    std::vector<Rational> roots;
    const int n = testgen::uniform(rng, 1, 6);
    for (int i = 0; i < n; ++i) roots.push_back(testgen::small_rational(rng, 12, 6) / 3);
    std::set<Rational> inside;
    for (const auto& r : roots) {
      if (r > -1 && r < 1) inside.insert(r);
    }
    const Rational scale = testgen::nonzero_rational(rng);
    CAPTURE(n);
    CHECK(sturm_count(from_roots(roots) * ParamRat(scale), -1, 1) ==
          static_cast<int>(inside.size()));
  }
}

}  // TEST_SUITE
