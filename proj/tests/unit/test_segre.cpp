#include "doctest.h"
#include "eddefect/error.hpp"
#include "eddefect/segre/series.hpp"

using namespace eddefect;

namespace {

TruncatedBiSeries one_plus_u(unsigned d) {
  return TruncatedBiSeries::constant(d, 0, 1) + TruncatedBiSeries::monomial(d, 0, 1, 0, 1);
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto inv = unit_inverse(one_plus_u(3));
  for (unsigned i = 0; i <= 3; ++i) CHECK(inv.coefficient(i, 0) == (i % 2 == 0 ? 1 : -1));
  CHECK(one_plus_u(3) * inv == TruncatedBiSeries::constant(3, 0, 1));
  CHECK(inv * one_plus_u(3) == TruncatedBiSeries::constant(3, 0, 1));

  auto f = TruncatedBiSeries::constant(1, 1, 1) + TruncatedBiSeries::monomial(1, 1, 1, 0, 1) +
           TruncatedBiSeries::monomial(1, 1, 0, 1, 1);
  auto sq = f * f;
  CHECK(sq.coefficient(0, 0) == 1);
  CHECK(sq.coefficient(1, 0) == 2);
  CHECK(sq.coefficient(0, 1) == 2);
  CHECK(sq.coefficient(1, 1) == 2);
  CHECK(sq.coefficient(2, 0) == 0);
  CHECK(f.pow(2) == sq);

  auto g = TruncatedBiSeries::constant(4, 4, 1);
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned j = 0; j <= 4; ++j)
      if (i + j > 0) g.set(i, j, static_cast<long>(3 * i) - static_cast<long>(j * j) + 1);
  CHECK(g * unit_inverse(g) == TruncatedBiSeries::constant(4, 4, 1));
  CHECK(unit_inverse(g) * g == TruncatedBiSeries::constant(4, 4, 1));

  try {
    unit_inverse(TruncatedBiSeries::constant(2, 2, 2));
    FAIL("expected NonUnitConstantTerm");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::NonUnitConstantTerm);
  }
  CHECK_THROWS_AS(unit_inverse(TruncatedBiSeries(2, 2)), Error);
}

TEST_CASE("Euler characteristic series") {
  CHECK(chi_value(ChiKind::Z, 2, 2) == 4);
  for (unsigned s = 1; s <= 6; ++s) {
    auto z = chi_series(ChiKind::Z, s, 1);
    for (unsigned i = 0; i < s; ++i) CHECK(z.coefficient(i, 0) == 0);
  }
  // frozen from an independent symbolic expansion
  CHECK(chi_value(ChiKind::ZQ, 2, 2) == 0);
  CHECK(chi_value(ChiKind::ZH, 2, 2) == 0);
  CHECK(chi_value(ChiKind::ZQH, 2, 2) == 0);
  CHECK(chi_value(ChiKind::Z, 2, 3) == 4);
  CHECK(chi_value(ChiKind::ZQ, 2, 3) == 8);
  CHECK(chi_value(ChiKind::ZH, 2, 3) == 4);
  CHECK(chi_value(ChiKind::ZQH, 2, 3) == 0);
  CHECK(chi_value(ChiKind::Z, 4, 4) == 16);
  CHECK(chi_value(ChiKind::ZQ, 4, 4) == -128);
  CHECK(chi_value(ChiKind::ZH, 4, 4) == 8);
  CHECK(chi_value(ChiKind::ZQH, 4, 4) == 144);
}

TEST_CASE("rank-one defect") {
  CHECK(ded_rank_one(2, 2) == 4);
  for (unsigned s = 1; s <= 6; ++s) CHECK(ded_rank_one(s, 1) == 0);
  CHECK(rank_one_series_coefficient(2, 3) == -8);
  CHECK(ded_rank_one(2, 3) == 8);
  CHECK(ded_rank_one(3, 3) == 36);
  CHECK(ded_rank_one(2, 4) == 12);
  CHECK(ded_rank_one(4, 4) == 280);
  CHECK(ded_rank_one(5, 7) == 11816);
  CHECK(ded_rank_one(8, 8) == 1213552);
  CHECK_THROWS_AS(ded_rank_one(0, 2), Error);
}

TEST_CASE("c coefficients") {
  auto c = rank_one_c_series(3);
  CHECK(c.coefficient(0, 0) == 0);
  CHECK(c.coefficient(1, 1) == 4);
  CHECK(c.coefficient(1, 2) == -20);
  CHECK(c.coefficient(2, 2) == 120);
  CHECK(c.coefficient(3, 3) == 2168);
  for (unsigned j = 0; j <= 3; ++j) CHECK(c.coefficient(0, j) == 0);
}

TEST_CASE("three routes agree") {
  for (unsigned s = 1; s <= 8; ++s) {
    for (unsigned t = 1; t <= 8; ++t) {
      CAPTURE(s);
      CAPTURE(t);
      const Integer d = ded_rank_one(s, t);
      CHECK(d == ded_rank_one_binomial(s, t));
      CHECK(d == ded_rank_one_inclusion_exclusion(s, t));
      CHECK(d == ded_rank_one(t, s));
      CHECK(d >= 0);
    }
  }
  CHECK(ded_rank_one_binomial(2, 2) == 4);
  CHECK(ded_rank_one_binomial(4, 3, 3) == ded_rank_one(4, 3));
  try {
    ded_rank_one_binomial(5, 2, 3);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::CapExceeded);
  }
}
