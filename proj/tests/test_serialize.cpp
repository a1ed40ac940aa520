#include <doctest.h>

#include <random>

#include "support/generators.hpp"
#include "support/printers.hpp"
#include "wronski/errors.hpp"
#include "wronski/random_tuples.hpp"
#include "wronski/serialize.hpp"
#include "wronski/wronskian.hpp"

using namespace wronski;
using testgen::q;

TEST_SUITE("serialize") {

TEST_CASE("json encodings") {
  CHECK(to_json(q(-3, 4)) == Json("-3/4"));
  CHECK(to_json(Rational(5)) == Json("5/1"));
  CHECK(to_json(Rational(0)) == Json("0/1"));

  const ParamPoly p = ParamPoly::monomial(2, 1, q(1, 2)) - ParamPoly(3);
  const Json jp = to_json(p);
  REQUIRE(jp.is_array());
  for (const auto& term : jp) {
    REQUIRE(term.size() == 3);
    CHECK(term[0].is_number_integer());
    CHECK(term[1].is_number_integer());
    CHECK(term[2].is_string());
  }
  CHECK(to_json(ParamPoly()) == Json::array());

  CHECK(to_json(AffineExp{1, -2, q(3, 2)}) == Json::parse(R"({"g": 1, "h": -2, "c": "3/2"})"));

  const EtaPoly e = EtaPoly::eta().pow(3) * ParamRat(ParamPoly::g()) + EtaPoly(ParamRat(2));
  const Json je = to_json(e);
  REQUIRE(je.size() == 2);
  CHECK(je[0][0] == 0);
  CHECK(je[1][0] == 3);
  CHECK(je[1][1].contains("num"));
  CHECK(je[1][1].contains("den"));

  const Json jq = to_json(make_state({StateType::I, 1}));
  CHECK(jq.contains("expS"));
  CHECK(jq.contains("expC"));
  CHECK(jq.contains("poly"));

  const Json jl = to_json(Ledger{-5, 1, {-5, 0, 15}, {0, 1, 0}});
  CHECK(jl["dg"] == -5);
  CHECK(jl["dh"] == 1);
  CHECK(jl["prefS"]["c"] == "15/1");
}

TEST_CASE("json round trips") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 100; ++k) {
    const Rational r = testgen::small_rational(rng, 1000, 97);
    CHECK(rational_from_json(to_json(r)) == r);
    const ParamPoly p = testgen::random_param_poly(rng, 3, 4);
    CHECK(param_poly_from_json(to_json(p)) == p);
    const ParamRat pr = testgen::random_param_rat(rng);
    CHECK(param_rat_from_json(to_json(pr)) == pr);
    const AffineExp a = testgen::random_affine(rng);
    CHECK(affine_exp_from_json(to_json(a)) == a);
    const EtaPoly e = testgen::random_eta_poly(rng, testgen::uniform(rng, 0, 5));
    CHECK(eta_poly_from_json(to_json(e)) == e);
    const Ledger l{testgen::uniform(rng, -9, 9), testgen::uniform(rng, -9, 9), a, testgen::random_affine(rng)};
    CHECK(ledger_from_json(to_json(l)) == l);
  }
  for (int k = 0; k < 10; ++k) {
    const QuasiPoly w = wronskian(random_tuple(rng, 3, 3));
    CHECK(quasi_poly_from_json(to_json(w)) == w);
    CHECK(quasi_poly_from_json(Json::parse(to_json(w).dump())) == w);
  }
}

TEST_CASE("malformed json") {
  for (const char* bad : {R"(3)", R"("1/0")", R"("x")", R"(null)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(rational_from_json(Json::parse(bad)), ParseError);
  }
  for (const char* bad : {R"({"g": 1})", R"([[0, 0]])", R"([[0, "a", "1/1"]])", R"("g")"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(param_poly_from_json(Json::parse(bad)), ParseError);
  }
  CHECK_THROWS_AS(affine_exp_from_json(Json::parse(R"({"g": 1, "h": 0})")), ParseError);
  CHECK_THROWS_AS(param_rat_from_json(Json::parse(R"({"num": [], "den": []})")), ParseError);
  CHECK_THROWS_AS(eta_poly_from_json(Json::parse(R"([[-1, {"num": [], "den": [[0, 0, "1/1"]]}]])")),
                  ParseError);
  CHECK_THROWS_AS(quasi_poly_from_json(Json::parse(R"({"expS": {"g": 0, "h": 0, "c": "0/1"}})")),
                  ParseError);
  CHECK_THROWS_AS(ledger_from_json(Json::parse(R"({"dg": "x"})")), ParseError);
}

TEST_CASE("latex output") {
  CHECK(to_latex(q(-3, 4)) == "-\\frac{3}{4}");
  CHECK(to_latex(Rational(2)) == "2");
  CHECK(to_latex(AffineExp{-5, 0, 15}) == "15 - 5g");
  const std::string w = to_latex(wronskian(StateTuple::parse("I0,N1")));
  CHECK(w.find("\\sin x") != std::string::npos);
  CHECK(w.find("\\eta") != std::string::npos);
  CHECK(StateTuple::parse("I0,N1").to_latex() ==
        "\\mathrm{W}[\\tilde{\\phi}^{\\mathrm{I}}_{0}, \\phi_{1}]");
}

}  // TEST_SUITE
