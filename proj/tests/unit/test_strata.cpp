#include "doctest.h"
#include "eddefect/error.hpp"
#include "eddefect/strata/strata_file.hpp"

using namespace eddefect;

namespace {

StratumPoset quadric_poset() {
  StratumPoset p;
  p.ambient_hypersurface_dim = 1;
  p.strata = {{"S0", 1, 1, 1}, {"P1", 0, 1, -1}, {"P2", 0, 1, -1}};
  p.order = {{"P1", "S0"}, {"P2", "S0"}};
  p.links = {{{"P1", "S0"}, 1}, {{"P2", "S0"}, 1}};
  return p;
}

IntegerMatrix product(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix c(a.size(), std::vector<Integer>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntegerMatrix identity(std::size_t n) {
  IntegerMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void check_inconsistent(const StratumPoset& p) {
  try {
    b_from_links(p);
    FAIL("expected PosetInconsistent");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::PosetInconsistent);
  }
}

}  // namespace

TEST_CASE("transition matrices of the quadric surface poset") {
  auto t = b_from_links(quadric_poset());
  CHECK(t.names == std::vector<std::string>{"P1", "P2", "S0"});
  CHECK(t.B == IntegerMatrix{{1, 0, -1}, {0, 1, -1}, {0, 0, 1}});
  CHECK(t.A == IntegerMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(product(t.A, t.B) == identity(3));
  CHECK(product(t.B, t.A) == identity(3));
}

TEST_CASE("transition matrices of small posets") {
  StratumPoset single;
  single.strata = {{"V", 0, 1, 3}};
  CHECK(b_from_links(single).B == IntegerMatrix{{1}});

  StratumPoset chain;
  chain.ambient_hypersurface_dim = 1;
  chain.strata = {{"V", 1, 1, 0}, {"W", 0, 1, 0}};
  chain.order = {{"W", "V"}};
  chain.links = {{{"W", "V"}, 0}};
  CHECK(b_from_links(chain).B == identity(2));

  // a three-step chain: links on the transitive pair are required too
  StratumPoset three;
  three.ambient_hypersurface_dim = 2;
  three.strata = {{"a", 0, 1, 1}, {"b", 1, 1, 2}, {"c", 2, 1, -1}};
  three.order = {{"a", "b"}, {"b", "c"}};
  three.links = {{{"a", "b"}, 2}, {{"b", "c"}, -1}, {{"a", "c"}, 5}};
  auto t = b_from_links(three);
  CHECK(product(t.A, t.B) == identity(3));
  CHECK(t.A[0][2] == 3);
  three.links.erase({"a", "c"});
  check_inconsistent(three);
}

TEST_CASE("alpha coefficients") {
  auto alpha = alpha_coefficients(quadric_poset());
  CHECK(alpha.at("P1") == -2);
  CHECK(alpha.at("P2") == -2);
  CHECK(alpha.at("S0") == 1);

  auto zero = quadric_poset();
  for (auto& s : zero.strata) s.mu = 0;
  for (const auto& [name, a] : alpha_coefficients(zero)) CHECK(a == 0);

  StratumPoset point;
  point.strata = {{"x", 0, 1, 7}};
  CHECK(alpha_coefficients(point).at("x") == 7);
}

TEST_CASE("evaluating the constructible function recovers mu") {
  auto p = quadric_poset();
  auto back = evaluate_at_strata(p, alpha_coefficients(p));
  for (const auto& s : p.strata) CHECK(back.at(s.name) == s.mu);
}

TEST_CASE("defect from strata") {
  CHECK(ded_from_strata(quadric_poset()) == 5);

  StratumPoset det;
  det.ambient_hypersurface_dim = 2;
  for (const char* n : {"N1", "N2", "N3", "N4"}) det.strata.push_back({n, 0, 1, mu_from_transversal(1, 2, 0)});
  CHECK(ded_from_strata(det) == 4);

  CHECK(ded_from_strata(StratumPoset{}) == 0);
}

TEST_CASE("isolated and equisingular cases agree with the general formula") {
  CHECK(ded_isolated({1, 1, 1, 1}) == 4);
  CHECK(ded_isolated({}) == 0);
  CHECK(ded_isolated({2, 3}) == 5);
  CHECK(ded_equisingular(1, 9) == 9);
  CHECK(ded_equisingular(0, 9) == 0);
  CHECK(ded_equisingular(2, 3) == 6);

  for (long d : {0L, 1L, 2L, 3L}) {
    StratumPoset p;
    p.ambient_hypersurface_dim = d;
    std::vector<Integer> mus;
    for (int k = 0; k < 3; ++k) {
      p.strata.push_back({"x" + std::to_string(k), 0, 1, mu_from_transversal(k + 1, d, 0)});
      mus.push_back(k + 1);
    }
    CHECK(ded_from_strata(p) == ded_isolated(mus));
  }

  StratumPoset one;
  one.ambient_hypersurface_dim = 3;
  one.strata = {{"Z", 3, 11, 2}};
  CHECK(ded_from_strata(one) == ded_equisingular(2, 11));
}

TEST_CASE("transversal Milnor fibers") {
  CHECK(mu_from_transversal(1, 2, 0) == 1);
  CHECK(mu_from_transversal(1, 1, 0) == -1);
  CHECK(mu_from_transversal(0, 5, 2) == 0);
  CHECK_THROWS_AS(mu_from_transversal(1, 1, 2), Error);
}

TEST_CASE("sliced defect") {
  auto p = quadric_poset();
  CHECK(ded_sliced(p, {{"S0", 1}, {"P1", 1}, {"P2", 1}}) == ded_from_strata(p));
  CHECK(ded_sliced(p, {{"S0", 1}, {"P1", 0}, {"P2", 0}}) == 1);
  CHECK(ded_sliced(StratumPoset{}, {}) == 0);
  CHECK_THROWS_AS(ded_sliced(p, {{"S0", 1}}), Error);
}

TEST_CASE("inconsistent posets") {
  auto p = quadric_poset();
  p.order.push_back({"S0", "S0"});
  check_inconsistent(p);

  p = quadric_poset();
  p.order.push_back({"P1", "Q"});
  check_inconsistent(p);

  p = quadric_poset();
  p.strata[1].dim = 1;
  check_inconsistent(p);

  p = quadric_poset();
  p.links[{"P1", "P2"}] = 0;
  check_inconsistent(p);

  p = quadric_poset();
  p.strata.push_back({"P1", 0, 1, 0});
  check_inconsistent(p);

  StratumPoset cycle;
  cycle.strata = {{"a", 0, 1, 0}, {"b", 0, 1, 0}};
  cycle.order = {{"a", "b"}, {"b", "a"}};
  check_inconsistent(cycle);
}

TEST_CASE("Euler obstructions as input and as cross-check") {
  auto p = quadric_poset();
  p.euler_obstructions = std::map<StratumPair, Integer>{{{"P1", "S0"}, 1}, {{"P2", "S0"}, 1}};
  CHECK(ded_from_strata(p) == 5);

  auto eu_only = p;
  eu_only.links.clear();
  CHECK(b_from_links(eu_only).B == b_from_links(quadric_poset()).B);

  (*p.euler_obstructions)[{"P2", "S0"}] = 2;
  check_inconsistent(p);
}

TEST_CASE("strata files") {
  auto p = parse_strata(R"({
    "ambient_hypersurface_dim": 1,
    "strata": [
      {"name": "S0", "dim": 1, "ged_closure": 1, "mu": 1},
      {"name": "P1", "dim": 0, "ged_closure": 1, "mu_transversal": 1},
      {"name": "P2", "dim": 0, "ged_closure": 1, "mu": -1}
    ],
    "order": [["P1", "S0"], ["P2", "S0"]],
    "links": [{"lower": "P1", "upper": "S0", "chi_c": 1}, {"lower": "P2", "upper": "S0", "chi_c": 1}]
  })");
  CHECK(p.strata[1].mu == -1);
  CHECK(ded_from_strata(p) == 5);

  auto syntax = [](const std::string& text) {
    try {
      parse_strata(text);
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.category() == ErrorCategory::SyntaxError);
    }
  };
  syntax("{");
  syntax("[]");
  syntax(R"({"strata": []})");
  syntax(R"({"ambient_hypersurface_dim": 1, "strata": [{"name": "a", "dim": 0, "ged_closure": 1}]})");
  syntax(R"({"ambient_hypersurface_dim": 1, "strata": [{"name": "a", "dim": 0, "ged_closure": 1, "mu": 1, "mu_transversal": 1}]})");
  syntax(R"({"ambient_hypersurface_dim": 1, "strata": [{"name": "a", "dim": "0", "ged_closure": 1, "mu": 1}]})");
  syntax(R"({"ambient_hypersurface_dim": 1, "strata": [], "order": [["a"]]})");

  CHECK_THROWS_AS(read_strata_file("/nonexistent/file.strata"), Error);
}

TEST_CASE("bundled strata files") {
  CHECK(ded_from_strata(read_strata_file(EDDEFECT_DATA_DIR "/strata/quadric_surface.strata")) == 5);
  CHECK(ded_from_strata(read_strata_file(EDDEFECT_DATA_DIR "/strata/det2x2.strata")) == 4);
}
