#include <random>

#include "doctest.h"
#include "eddefect/poly/parser.hpp"

using namespace eddefect;

TEST_CASE("parse examples") {
  auto r = make_ring(indexed_names("x", 4), Domain::rational());
  auto det = parse_polynomial<GaussianRational>("x0*x3 - x1*x2", r);
  REQUIRE(det.num_terms() == 2);
  // grevlex puts x1*x2 ahead of x0*x3
  CHECK(det.terms()[0].coeff == GaussianRational(-1));
  CHECK(det.terms()[1].coeff == GaussianRational(1));

  CHECK(parse_polynomial<GaussianRational>("0", r).is_zero());

  auto iso = parse_polynomial<GaussianRational>("x0^2+x1^2+x2^2+x3^2", r);
  CHECK(iso.num_terms() == 4);
  for (const auto& t : iso.terms()) CHECK(t.coeff == GaussianRational(1));
}

TEST_CASE("numbers: decimals, rationals, imaginary unit, sqrt") {
  auto r = make_ring({"x"}, Domain::rational());
  CHECK(parse_polynomial<GaussianRational>("0.25*x", r) == parse_polynomial<GaussianRational>("1/4*x", r));
  CHECK(parse_polynomial<GaussianRational>("1e-2", r).constant_term() == GaussianRational(mpq_class(1, 100)));
  CHECK(parse_polynomial<GaussianRational>("I^2", r) == parse_polynomial<GaussianRational>("-1", r));
  CHECK(parse_polynomial<GaussianRational>("sqrt(4)*x", r) == parse_polynomial<GaussianRational>("2*x", r));
  CHECK_THROWS_AS(parse_polynomial<GaussianRational>("sqrt(2)*x", r), ParseError);

  auto c = make_ring({"x"}, Domain::complex_double());
  auto s2 = parse_polynomial<Complex>("sqrt(2)*x", c);
  CHECK(std::abs(s2.leading_term().coeff - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("parse errors carry category and position") {
  auto r = make_ring({"x", "y"}, Domain::rational());
  try {
    parse_polynomial<GaussianRational>("x + z", r);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.category() == ErrorCategory::UnknownVariable);
    CHECK(e.position() == 4);
  }
  for (const char* bad : {"2x", "x y", "x +", "(x", "x^y", "x/y", "x ** 2", "x^-1", "#"}) {
    CAPTURE(bad);
    try {
      parse_polynomial<GaussianRational>(bad, r);
      FAIL("expected throw");
    } catch (const ParseError& e) {
      CHECK(e.category() == ErrorCategory::SyntaxError);
    }
  }
}

TEST_CASE("imaginary unit in prime fields") {
  auto good = make_ring({"x"}, Domain::prime_field(32009));
  auto f = parse_polynomial<Fp>("x^2 + I^2", good);
  CHECK(f == parse_polynomial<Fp>("x^2 - 1", good));
  auto bad = make_ring({"x"}, Domain::prime_field(32003));
  CHECK_THROWS_AS(parse_polynomial<Fp>("I*x", bad), ParseError);
}

TEST_CASE("property: parse(print(f)) == f in exact domains") {
  std::mt19937_64 rng(99);
  auto r = make_ring({"a", "b", "c"}, Domain::rational());
  auto fr = make_ring({"a", "b", "c"}, Domain::prime_field(101));
  std::uniform_int_distribution<long> d(-20, 20), den(1, 7), e(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Term<GaussianRational>> terms;
    std::vector<Term<Fp>> fterms;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
      Monomial m{static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))};
      long im = trial % 3 == 0 ? d(rng) : 0;
      terms.push_back({m, GaussianRational(mpq_class(d(rng), den(rng)), mpq_class(im, den(rng)))});
      fterms.push_back({m, Fp(d(rng), 101)});
    }
    QPoly f(r, terms);
    CAPTURE(f.to_string());
    CHECK(parse_polynomial<GaussianRational>(f.to_string(), r) == f);
    FpPoly g(fr, fterms);
    CHECK(parse_polynomial<Fp>(g.to_string(), fr) == g);
  }
}

TEST_CASE("canonical printing") {
  auto r = make_ring(indexed_names("x", 4), Domain::rational());
  CHECK(parse_polynomial<GaussianRational>("x0*x3 - x1*x2", r).to_string() == "-x1*x2 + x0*x3");
  CHECK(parse_polynomial<GaussianRational>("(x1 - I*x0)^2", r).to_string() == "-x0^2 - 2*I*x0*x1 + x1^2");
}
