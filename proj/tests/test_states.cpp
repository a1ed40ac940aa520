#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/printers.hpp"
#include "wronski/errors.hpp"
#include "wronski/random_tuples.hpp"
#include "wronski/spectral.hpp"
#include "wronski/states.hpp"

using namespace wronski;
using testgen::q;

namespace {

const ParamPoly G = ParamPoly::g();
const ParamPoly H = ParamPoly::h();
const EtaPoly ETA = EtaPoly::eta();

EtaPoly constant(const Rational& c) { return EtaPoly(ParamRat(c)); }

// Three-term recurrence at numeric (alpha, beta).
EtaPoly jacobi_by_recurrence(int n, const Rational& al, const Rational& be) {
  EtaPoly p0 = constant(1);
  if (n == 0) return p0;
  EtaPoly p1 = constant(al + 1 - (al + be + 2) / 2) + ETA * ParamRat((al + be + 2) / 2);
  for (int m = 2; m <= n; ++m) {
    const Rational s = 2 * m + al + be;
    const Rational a1 = 2 * m * (m + al + be) * (s - 2);
    const Rational b1 = (s - 1) * s * (s - 2);
    const Rational c1 = (s - 1) * (al * al - be * be);
    const Rational d1 = 2 * (m + al - 1) * (m + be - 1) * s;
    EtaPoly next = (ETA * ParamRat(b1) + constant(c1)) * p1 - p0 * ParamRat(d1);
    p0 = p1;
    p1 = next * ParamRat(Rational(1) / a1);
  }
  return p1;
}

QuasiRat instantiated(const QuasiPoly& f, const ParamPoint& at) { return QuasiRat(f.instantiate(at)); }

}  // namespace

TEST_SUITE("states") {

TEST_CASE("pochhammer symbols") {
  CHECK(pochhammer(G, 0) == ParamPoly(1));
  const ParamPoly alpha = G;
  CHECK(pochhammer(alpha + ParamPoly(1), 2) == alpha * alpha + ParamPoly(3) * alpha + ParamPoly(2));
  CHECK(pochhammer(G, 3).evaluate(2, 0) == 24);
}

TEST_CASE("jacobi polynomials") {
  const ParamPoly al = G, be = H;
  CHECK(jacobi_poly(0, al, be) == EtaPoly(ParamRat(1)));
  const EtaPoly p1 = EtaPoly(ParamRat(al + ParamPoly(1))) -
                     EtaPoly::one_minus_eta() * ParamRat((al + be + ParamPoly(2)) * q(1, 2));
  CHECK(jacobi_poly(1, al, be) == p1);
  CHECK(jacobi_poly(2, ParamPoly(0), ParamPoly(0)) ==
        (ETA.pow(2) * ParamRat(3) - constant(1)) * ParamRat(q(1, 2)));

  EtaPoly prev = constant(1), cur = ETA;
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(jacobi_poly(n, ParamPoly(0), ParamPoly(0)) == cur);
    EtaPoly next = (ETA * cur * ParamRat(2 * n + 1) - prev * ParamRat(n)) * ParamRat(q(1, n + 1));
    prev = cur;
    cur = next;
  }

  const ParamPoly alpha = G - ParamPoly(q(1, 2)), beta = ParamPoly(q(1, 2)) - H;
  std::mt19937_64 rng(21);
  for (int k = 0; k < 10; ++k) {
    const ParamPoint pt = random_generic_point(rng);
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(n);
      const EtaPoly sym = jacobi_poly(n, alpha, beta);
      CHECK(sym.degree() == n);
      CHECK_FALSE(sym.leading().is_zero());
      CHECK(sym.has_polynomial_coeffs());
      CHECK(sym.instantiate(pt.g, pt.h) ==
            jacobi_by_recurrence(n, alpha.evaluate(pt.g, pt.h), beta.evaluate(pt.g, pt.h)));
    }
  }
}

TEST_CASE("state construction") {
  const QuasiPoly i0 = make_state({StateType::I, 0});
  CHECK(i0.exp_sin() == AffineExp{1, 0, 0});
  CHECK(i0.exp_cos() == AffineExp{0, -1, 1});
  CHECK(i0.poly() == EtaPoly(ParamRat(1)));

  const QuasiPoly n0 = make_state({StateType::N, 0});
  CHECK(n0.exp_sin() == AffineExp{1, 0, 0});
  CHECK(n0.exp_cos() == AffineExp{0, 1, 0});
  CHECK(n0.poly() == EtaPoly(ParamRat(1)));

  const QuasiPoly iii1 = make_state({StateType::III, 1});
  CHECK(iii1.exp_sin() == AffineExp{-1, 0, 1});
  CHECK(iii1.exp_cos() == AffineExp{0, -1, 1});
  CHECK(iii1.poly() ==
        jacobi_poly(1, ParamPoly(q(1, 2)) - G, ParamPoly(q(1, 2)) - H));
}

TEST_CASE("eigenvalues") {
  const Rational half = q(1, 2);
  CHECK(eigenvalue({StateType::N, 0}).is_zero());
  for (int v = 0; v <= 8; ++v) {
    CAPTURE(v);
    CHECK(eigenvalue({StateType::II, v}) ==
          ParamPoly(-4) * (G - ParamPoly(v + half)) * (H + ParamPoly(v + half)));
    CHECK(eigenvalue({StateType::III, v}) ==
          ParamPoly(-4 * (v + 1)) * (G + H - ParamPoly(v + 1)));
    CHECK(eigenvalue({StateType::N, v}) == ParamPoly(4 * v) * (G + H + ParamPoly(v)));
    // E^I_v with v -> -(v+1)
    const Rational w = -(v + 1);
    CHECK(eigenvalue({StateType::II, v}) ==
          ParamPoly(-4) * (G + ParamPoly(w + half)) * (H - ParamPoly(w + half)));
    CHECK(eigenvalue({StateType::III, v}) == energy(-(v + 1)));
  }
}

TEST_CASE("pairing table") {
  using T = StateType;
  const int expected[4][4] = {{1, -1, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, -1, 1}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(pairing(kAllStateTypes[i], kAllStateTypes[j]) == expected[i][j]);
    }
  }
  CHECK(pairing(T::I, T::I) == 1);
  CHECK(pairing(T::I, T::II) == -1);
  CHECK(pairing(T::I, T::III) == 0);
}

TEST_CASE("potential") {
  const QuasiRat u = potential();
  REQUIRE(u.exp_sin().is_constant());
  REQUIRE(u.exp_cos().is_constant());
  // sin²x = (1-η)/2 and cos²x = (1+η)/2; the stored exponents are even integers.
  auto value = [&](const Rational& g, const Rational& h, const Rational& eta) -> Rational {
    const Rational s2 = (1 - eta) / 2, c2 = (1 + eta) / 2;
    Rational pref = 1;
    const long a = u.exp_sin().c0.get_num().get_si() / 2, b = u.exp_cos().c0.get_num().get_si() / 2;
    for (long k = 0; k < std::abs(a); ++k) pref = a > 0 ? Rational(pref * s2) : Rational(pref / s2);
    for (long k = 0; k < std::abs(b); ++k) pref = b > 0 ? Rational(pref * c2) : Rational(pref / c2);
    return pref * u.num().evaluate(ParamRat(eta)).evaluate(g, h) /
           u.den().evaluate(ParamRat(eta)).evaluate(g, h);
  };
  // η = 0 is x = π/4, where sin²x = cos²x = 1/2.
  CHECK(value(2, 3, 0) == Rational(2 * 1) / q(1, 2) + Rational(3 * 2) / q(1, 2) - 25);
  const Rational eta = q(1, 3);
  CHECK(value(0, q(7, 3), eta) == Rational(q(7, 3) * q(4, 3)) / ((1 + eta) / 2) - q(49, 9));
  CHECK(value(q(5, 3), q(5, 3), eta) == value(q(5, 3), q(5, 3), -eta));
}

TEST_CASE("states solve the undeformed Schrödinger equation") {
  const QuasiRat u = potential();
  for (int v = 0; v <= 3; ++v) {
    const State s{StateType::I, v};
    const QuasiRat f = QuasiRat(make_state(s));
    CHECK(apply_hamiltonian(u, f) == f.scaled(ParamRat(eigenvalue(s))));
  }
  const ParamPoint at = default_generic_point();
  const QuasiRat ui = u.instantiate(at);
  for (const StateType t : kAllStateTypes) {
    for (int v = 0; v <= 4; ++v) {
      const State s{t, v};
      CAPTURE(s.to_string());
      const QuasiRat f = instantiated(make_state(s), at);
      CHECK(apply_hamiltonian(ui, f) == f.scaled(ParamRat(eigenvalue(s).evaluate(at.g, at.h))));
    }
  }
}

TEST_CASE("tuple parsing") {
  const StateTuple t = StateTuple::parse("I1,II2,III1");
  REQUIRE(t.size() == 3);
  CHECK(t[0] == State{StateType::I, 1});
  CHECK(t[1] == State{StateType::II, 2});
  CHECK(t[2] == State{StateType::III, 1});
  CHECK(t.to_string() == "I1,II2,III1");
  CHECK(StateTuple::parse("").empty());
  CHECK(StateTuple::parse("N0,N3,III4").indices(StateType::N) == std::vector<int>{0, 3});
  for (const char* bad : {"I", "X1", "I-1", "I1,,N0", "IV2", "N1x", ","}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(StateTuple::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(StateTuple::parse("I1,I1"), InvalidTuple);
  CHECK_THROWS_AS(StateTuple({{StateType::N, -1}}), InvalidTuple);

  std::mt19937_64 rng(22);
  for (int k = 0; k < 100; ++k) {
    const StateTuple r = random_tuple(rng, 7, 6);
    CHECK(StateTuple::parse(r.to_string()) == r);
    CHECK(r.sorted().sorted() == r.sorted());
  }
}

TEST_CASE("ground shifts") {
  CHECK(ground_shift(StateType::I) == std::pair<long, long>{1, -1});
  CHECK(ground_shift(StateType::II) == std::pair<long, long>{-1, 1});
  CHECK(ground_shift(StateType::III) == std::pair<long, long>{-1, -1});
  CHECK(ground_shift(StateType::N) == std::pair<long, long>{1, 1});
}

}  // TEST_SUITE
