#include <random>

#include "doctest.h"
#include "eddefect/critical/variety.hpp"
#include "eddefect/groebner/buchberger.hpp"
#include "eddefect/groebner/ed_oracle.hpp"
#include "eddefect/groebner/milnor.hpp"
#include "eddefect/poly/parser.hpp"

using namespace eddefect;

namespace {

RingPtr fp_ring(std::vector<std::string> vars, std::uint32_t p = 32003) {
  return make_ring(std::move(vars), Domain::prime_field(p));
}

FpPoly fp(const char* text, const RingPtr& r) { return parse_polynomial<Fp>(text, r); }

QPoly qp(const char* text, const RingPtr& r) { return parse_polynomial<GaussianRational>(text, r); }

std::vector<std::string> texts(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.generators) out.push_back(g.to_string());
  return out;
}

FpPoly s_poly(const FpPoly& f, const FpPoly& g) {
  const auto& r = f.ring();
  Monomial l = lcm(f.leading_term().monomial, g.leading_term().monomial);
  auto a = FpPoly::term(r, l / f.leading_term().monomial, g.leading_term().coeff);
  auto b = FpPoly::term(r, l / g.leading_term().monomial, f.leading_term().coeff);
  return a * f - b * g;
}

void check_groebner(const GroebnerBasis& gb, const std::vector<FpPoly>& gens) {
  for (const auto& g : gens) CHECK(normal_form(g, gb.generators).is_zero());
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    CHECK(gb.generators[i].leading_term().coeff.value() == 1);
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
      CHECK(normal_form(s_poly(gb.generators[i], gb.generators[j]), gb.generators).is_zero());
    }
  }
}

VarietyPresentation det2x2() { return make_variety(indexed_names("x", 4), {"x0*x3 - x1*x2"}, 1, VarietyKind::Projective); }

}  // namespace

TEST_CASE("buchberger examples") {
  auto r1 = fp_ring({"x"});
  CHECK(texts(buchberger({fp("x^2-1", r1)})) == std::vector<std::string>{"x^2 - 1"});
  auto r2 = fp_ring({"x", "y"});
  CHECK(texts(buchberger({fp("x", r2), fp("y", r2)})) == std::vector<std::string>{"x", "y"});
  CHECK(texts(buchberger({fp("x+y", r2), fp("x-y", r2)})) == std::vector<std::string>{"x", "y"});
  CHECK(texts(buchberger({fp("x^2", r2), fp("x*y - 1", r2)})) == std::vector<std::string>{"1"});
}

TEST_CASE("buchberger pair cap") {
  auto r = fp_ring({"x", "y", "z"});
  BuchbergerOptions tiny;
  tiny.max_pairs = 1;
  try {
    buchberger({fp("x^2 - y", r), fp("y^2 - z", r), fp("z^2 - x*y", r)}, tiny);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::CapExceeded);
  }
}

TEST_CASE("property: bases on random systems satisfy Buchberger's criterion") {
  std::mt19937_64 rng(11);
  auto r = fp_ring({"x", "y", "z"}, 101);
  std::uniform_int_distribution<int> c(0, 100), e(0, 2);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<FpPoly> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term<Fp>> terms;
      for (int t = 0; t < 4; ++t) {
        terms.push_back({Monomial{static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)),
                                  static_cast<unsigned>(e(rng))},
                         Fp(c(rng), 101)});
      }
      gens.emplace_back(r, terms);
    }
    auto gb = buchberger(gens);
    check_groebner(gb, gens);
    // normal form is linear
    auto a = gens[0] * gens[1] + fp("x*y*z + 3", r);
    auto b = fp("x^3 - y^2*z + 5*x", r);
    CHECK(normal_form(a + b, gb.generators) == normal_form(a, gb.generators) + normal_form(b, gb.generators));
  }
}

TEST_CASE("staircase counts") {
  CHECK(staircase_count({Monomial{2, 0}, Monomial{0, 3}}, 2) == 6u);
  CHECK_FALSE(staircase_count({Monomial{1, 0}}, 2).has_value());
  CHECK(staircase_count({Monomial{1, 0}, Monomial{0, 1}}, 2) == 1u);
  CHECK(staircase_count({Monomial{0, 0}}, 2) == 0u);
  CHECK(staircase_count({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}, 2) == 3u);

  auto r = fp_ring({"x", "y"});
  auto gb = buchberger({fp("x^2 - 1", r), fp("y^2 - 4", r)});
  CHECK(staircase_count(gb) == 4u);
}

TEST_CASE("Milnor numbers") {
  auto r = make_ring({"x", "y"}, Domain::rational());
  CHECK(milnor_number(qp("x^2 + y^2", r)).mu == 1);
  for (unsigned k = 1; k <= 6; ++k) {
    auto g = QPoly(qp("x^2", r)) + pow(QPoly::variable(r, 1), k + 1);
    auto res = milnor_number(g);
    CHECK(res.mu == k);
    CHECK(res.standard_monomials.size() == k);
  }
  CHECK(milnor_number(qp("x^3 + y^4", r)).mu == 6);
  CHECK(milnor_number(qp("x^3 + x*y^3", r)).mu == 7);
  CHECK(milnor_number(qp("x^3 + y^5", r)).mu == 8);
  CHECK(milnor_number(qp("x^2*y + y^3", r)).mu == 4);

  try {
    milnor_number(qp("x^2*y", r));
    FAIL("expected non-isolated");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::NonIsolatedOrCapExceeded);
  }
  try {
    milnor_number(qp("x^2 + y", r));
    FAIL("expected NotSingular");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::NotSingular);
  }
  CHECK_THROWS_AS(milnor_number(qp("x^2 + y^2 + 1", r)), Error);
  // the degree cap bounds the staircase
  try {
    milnor_number(qp("x^2 + y^9", r), 5);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::NonIsolatedOrCapExceeded);
  }
}

TEST_CASE("property: Milnor number is invariant under multiplication by a unit") {
  auto r = make_ring({"x", "y"}, Domain::rational());
  auto unit = qp("1 + x - 2*y + x*y", r);
  for (const char* g : {"x^2 + y^2", "x^2 + y^3", "x^2 + y^5", "x^2*y + y^3", "x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5"}) {
    CAPTURE(g);
    CHECK(milnor_number(unit * qp(g, r)).mu == milnor_number(qp(g, r)).mu);
  }
}

TEST_CASE("local algebra of a non-principal ideal") {
  auto r = make_ring({"x", "y"}, Domain::rational());
  CHECK(local_algebra_dimension({qp("x^2 - x^3", r), qp("y^3 + x*y", r)}).mu == 6);
  // (x - 1) is a unit at the origin
  CHECK(local_algebra_dimension({qp("x - 1", r)}).mu == 0);
}

TEST_CASE("Milnor number at the isotropic nodes of the 2x2 determinant, both routes") {
  auto v = det2x2();
  const GaussianRational i(0, 1);
  for (auto a : {i, -i}) {
    for (auto b : {i, -i}) {
      std::vector<GaussianRational> p{1, a, b, a * b};
      CHECK(milnor_at_point(v, p, MilnorRoute::Graph).mu == 1);
      CHECK(milnor_at_point(v, p, MilnorRoute::LeGreuel).mu == 1);
    }
  }
  // a point of X off the quadric
  std::vector<GaussianRational> off{1, 2, 3, 6};
  CHECK_THROWS_AS(milnor_at_point(v, off, MilnorRoute::Graph), Error);
  CHECK_THROWS_AS(milnor_at_point(v, off, MilnorRoute::LeGreuel), Error);
}

TEST_CASE("rationalize point") {
  std::vector<Complex> p{Complex(0, 2), Complex(-2, 0), Complex(-2, 0), Complex(0, -2)};
  auto q = rationalize_point(p);
  CHECK(q[0] == GaussianRational(1));
  CHECK(q[1] == GaussianRational(0, 1));
  CHECK(q[3] == GaussianRational(-1));
  std::vector<Complex> bad{1.0, std::sqrt(2.0)};
  CHECK_THROWS_AS(rationalize_point(bad, 10, 1e-9), Error);
}

TEST_CASE("symbolic ED degree") {
  auto det = det2x2();
  CHECK(symbolic_ed_degree(det, EdMode::generic(), 1).degree == 6);
  CHECK(symbolic_ed_degree(det, EdMode::unit(), 1).degree == 2);

  auto circle = make_variety({"x", "y"}, {"x^2 + y^2 - 1"}, 1, VarietyKind::Affine);
  CHECK(symbolic_ed_degree(circle, EdMode::unit(), 4).degree == 2);
  CHECK(symbolic_ed_degree(circle, EdMode::generic(), 4).degree == 4);

  auto quadric = make_variety(indexed_names("x", 4),
                              {"(x1 - I*x0)^2 + 2*(x3 - I*x2)^2 + x0^2 + x1^2 + x2^2 + x3^2"}, 1,
                              VarietyKind::Projective);
  auto unit = symbolic_ed_degree(quadric, EdMode::unit(), 2);
  CHECK(unit.degree == 1);
  CHECK(unit.runs[0].prime % 4 == 1);
  CHECK(symbolic_ed_degree(quadric, EdMode::generic(), 2).degree == 6);

  auto numeric = make_variety({"x", "y"}, {"sqrt(2)*x^2 + y^2 - 1"}, 1, VarietyKind::Affine);
  CHECK_THROWS_AS(symbolic_ed_degree(numeric, EdMode::unit(), 1), Error);
}

TEST_CASE("property: oracle is stable across seeds") {
  auto det = det2x2();
  for (std::uint64_t seed : {3u, 17u, 99u}) {
    CHECK(symbolic_ed_degree(det, EdMode::generic(), seed).degree == 6);
  }
}
