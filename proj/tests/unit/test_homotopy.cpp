#include "doctest.h"
#include "eddefect/groebner/ed_oracle.hpp"
#include "eddefect/homotopy/ed_degree.hpp"
#include "eddefect/homotopy/singular_locus.hpp"
#include "eddefect/critical/system_file.hpp"
#include "eddefect/poly/parser.hpp"
#include "eddefect/util/random.hpp"

using namespace eddefect;

namespace {

std::vector<CPoly> system(const std::vector<std::string>& vars, const std::vector<const char*>& eqs) {
  auto r = make_ring(vars, Domain::complex_double());
  std::vector<CPoly> out;
  for (const char* e : eqs) out.push_back(parse_polynomial<Complex>(e, r));
  return out;
}

VarietyPresentation det2x2() { return make_variety(indexed_names("x", 4), {"x0*x3 - x1*x2"}, 1, VarietyKind::Projective); }

VarietyPresentation circle() { return make_variety({"x", "y"}, {"x^2 + y^2 - 1"}, 1, VarietyKind::Affine); }

VarietyPresentation quadric_surface() {
  return make_variety(indexed_names("x", 4), {"(x1 - I*x0)^2 + 2*(x3 - I*x2)^2 + x0^2 + x1^2 + x2^2 + x3^2"}, 1,
                      VarietyKind::Projective);
}

}  // namespace

TEST_CASE("total degree start systems") {
  CHECK(total_degree_start(system({"x", "y"}, {"x^2 - 1", "y^2 - 4"}), 1).num_paths == 4);
  CHECK(total_degree_start(system({"x", "y"}, {"x + y - 1", "x - y"}), 1).num_paths == 1);
  auto det = build_critical_system(det2x2(), draw_ed_data(det2x2(), EdMode::generic(), 1));
  CHECK(total_degree_start(det.equations, 1).num_paths == 32);
  try {
    total_degree_start(system({"x", "y"}, {"x^10 - 1", "y^10 - 1"}), 1, 50);
    FAIL("expected BezoutOverflow");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::BezoutOverflow);
  }
  auto start = total_degree_start(system({"x", "y"}, {"x^3 - 1", "y^2 - 4"}), 7);
  for (std::uint64_t k = 0; k < start.num_paths; ++k) {
    auto z = start.solution(k);
    CHECK(std::abs(std::pow(z[0], 3) - start.constants[0]) < 1e-12);
    CHECK(std::abs(std::pow(z[1], 2) - start.constants[1]) < 1e-12);
  }
}

TEST_CASE("track paths: univariate quadratic") {
  auto target = system({"x"}, {"x^2 - 1"});
  Homotopy h(target, 3);
  TrackerSettings s;
  std::vector<Complex> ends;
  for (std::uint64_t k = 0; k < h.start().num_paths; ++k) {
    auto o = h.track(h.start().solution(k), s);
    REQUIRE(o.status == PathStatus::Converged);
    CHECK(o.final_residual <= s.newton_tol);
    ends.push_back(o.point[0]);
  }
  REQUIRE(ends.size() == 2);
  CHECK(std::abs(ends[0] * ends[1] + 1.0) < 1e-8);
  CHECK(std::abs(std::abs(ends[0].real()) - 1.0) < 1e-8);
}

TEST_CASE("track paths: linear target converges in few steps") {
  auto target = system({"x", "y"}, {"x + 2*y - 3", "x - y"});
  Homotopy h(target, 5);
  TrackerSettings s;
  auto o = h.track(h.start().solution(0), s);
  REQUIRE(o.status == PathStatus::Converged);
  CHECK(std::abs(o.point[0] - 1.0) < 1e-10);
  CHECK(o.steps_taken <= static_cast<std::size_t>(2.0 / s.initial_step));
}

TEST_CASE("track paths: solutions at infinity diverge") {
  TrackerSettings s;
  // one finite solution, a second path ends at a regular point at infinity
  {
    auto target = system({"x", "y"}, {"x*y - 1", "x - 2"});
    Homotopy h(target, 1);
    int converged = 0, diverged = 0;
    for (std::uint64_t k = 0; k < h.start().num_paths; ++k) {
      auto o = h.track(h.start().solution(k), s);
      converged += o.status == PathStatus::Converged;
      diverged += o.status == PathStatus::Diverged;
    }
    CHECK(converged == 1);
    CHECK(diverged == 1);
  }
  // no finite solutions; both paths meet at a singular point at infinity
  {
    auto target = system({"x", "y"}, {"x*y - 1", "x"});
    Homotopy h(target, 1);
    for (std::uint64_t k = 0; k < h.start().num_paths; ++k) {
      auto o = h.track(h.start().solution(k), s);
      CAPTURE(to_string(o.status));
      CAPTURE(o.t_reached);
      CHECK(o.status == PathStatus::Diverged);
    }
  }
}

TEST_CASE("solve_system") {
  TrackerSettings s;
  auto sols = solve_system(system({"x", "y"}, {"x^2 - 1", "y^2 - 4"}), s);
  CHECK(sols.count() == 4);
  for (const auto& d : sols.diagnostics) {
    CHECK(d.residual <= 1e-8);
    CHECK(d.jacobian_rank == 2);
  }
  auto c = circle();
  auto unit = build_critical_system(c, draw_ed_data(c, EdMode::unit(), 2));
  CHECK(solve_system(unit.equations, s).count() == 2);
  auto gen = build_critical_system(c, draw_ed_data(c, EdMode::generic(), 2));
  CHECK(solve_system(gen.equations, s).count() == 4);
}

TEST_CASE("parallel tracking reproduces serial results") {
  auto v = det2x2();
  auto sys = build_critical_system(v, draw_ed_data(v, EdMode::generic(), 4));
  TrackerSettings serial;
  TrackerSettings parallel = serial;
  parallel.threads = 4;
  auto a = solve_system(sys.equations, serial);
  auto b = solve_system(sys.equations, parallel);
  REQUIRE(a.count() == b.count());
  CHECK(a.summary.converged == b.summary.converged);
  CHECK(a.summary.diverged == b.summary.diverged);
  for (std::size_t i = 0; i < a.count(); ++i) CHECK(a.points[i] == b.points[i]);
}

TEST_CASE("ED degrees") {
  TrackerSettings s;
  CHECK(ed_degree(det2x2(), EdMode::generic(), s).degree == 6);
  CHECK(ed_degree(det2x2(), EdMode::unit(), s).degree == 2);
  CHECK(ed_degree(quadric_surface(), EdMode::generic(), s).degree == 6);
  CHECK(ed_degree(quadric_surface(), EdMode::unit(), s).degree == 1);
  CHECK(ed_degree(circle(), EdMode::unit(), s).degree == 2);
  CHECK(ed_degree(circle(), EdMode::generic(), s).degree == 4);
  CHECK(ed_degree(circle(), EdMode::weighted({1, 4}), s).degree == 4);
}

TEST_CASE("ED defect") {
  TrackerSettings s;
  CHECK(ed_defect(det2x2(), s).defect == 4);
  CHECK(ed_defect(quadric_surface(), s).defect == 5);
  auto y1 = make_variety({"x0", "x1", "a", "b"}, {"sqrt(1)*x0*x1 - a*b"}, 1, VarietyKind::Projective);
  CHECK(ed_defect(y1, s).defect == 4);
}

TEST_CASE("critical points lie on the smooth locus") {
  TrackerSettings s;
  auto run = count_critical_points(det2x2(), EdMode::generic(), 9, s);
  CHECK(run.count == 6);
  auto v = det2x2();
  for (const auto& x : run.critical_points) {
    CHECK(std::abs(v.generators[0].evaluate(std::vector<Complex>(x.data(), x.data() + x.size()))) < 1e-8);
  }
  VectorXc origin = VectorXc::Zero(4);
  CHECK_FALSE(on_smooth_locus(v, origin));
}

TEST_CASE("isolated singularities") {
  TrackerSettings s;
  auto pts = isolated_singularities(det2x2(), s);
  CHECK(pts.size() == 4);
  for (const auto& p : pts) {
    // representatives (1, +-i, +-i, -+1) up to the choice of the unit coordinate
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(std::abs(std::abs(p[k]) - 1.0) < 1e-6);
    CHECK(std::abs(p[0] * p[3] - p[1] * p[2]) < 1e-8);
  }

  auto transversal = make_variety(indexed_names("x", 4), {"x0^2 + 2*x1^2 + 3*x2^2 + 5*x3^2"}, 1, VarietyKind::Projective);
  CHECK(isolated_singularities(transversal, s).empty());

  try {
    isolated_singularities(quadric_surface(), s);
    FAIL("expected PositiveDimensional");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::PositiveDimensional);
  }
}

TEST_CASE("McKeithan varieties") {
  TrackerSettings s;
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto x = read_system_file(EDDEFECT_DATA_DIR "/systems/mckeithan_X" + std::to_string(n) + ".sys");
    auto y = read_system_file(EDDEFECT_DATA_DIR "/systems/mckeithan_Y" + std::to_string(n) + ".sys");
    auto dy = ed_defect(y, s);
    CHECK(dy.generic.degree == 6);
    CHECK(dy.defect == 4);
    if (n > 1) {
      auto dx = ed_defect(x, s);
      CHECK(dx.generic.degree == 6);
      CHECK(dx.defect == 0);
    }
  }
}

TEST_CASE("homotopy counts match the prime-field oracle") {
  TrackerSettings s;
  std::string cubic;
  {
    Rng rng(2024, "cubic");
    const char* monomials[] = {"x^3", "x^2*y", "x*y^2", "y^3", "x^2", "x*y", "y^2", "x", "y", "1"};
    for (const char* m : monomials) cubic += " + (" + std::to_string(rng.integer(-9, 9)) + ")*" + m;
  }
  struct Instance {
    VarietyPresentation v;
    EdMode mode;
  };
  std::vector<Instance> instances = {
      {circle(), EdMode::unit()},
      {circle(), EdMode::generic()},
      {circle(), EdMode::weighted({1, 4})},
      {make_variety({"x", "y"}, {cubic}, 1, VarietyKind::Affine), EdMode::generic()},
      {make_variety({"x", "y"}, {cubic}, 1, VarietyKind::Affine), EdMode::unit()},
      {det2x2(), EdMode::unit()},
      {det2x2(), EdMode::generic()},
  };
  for (const auto& inst : instances) {
    CAPTURE(inst.v.sources.front());
    CAPTURE(to_string(inst.mode));
    const auto homotopy = ed_degree(inst.v, inst.mode, s);
    const auto oracle = symbolic_ed_degree(inst.v, inst.mode, 77);
    CHECK(homotopy.degree == oracle.degree);
  }
}

TEST_CASE("unit ED degree is invariant under signed coordinate permutations") {
  TrackerSettings s;
  auto permuted = make_variety(indexed_names("x", 4), {"(-x3)*x1 - x0*(-x2)"}, 1, VarietyKind::Projective);
  CHECK(ed_degree(permuted, EdMode::unit(), s).degree == ed_degree(det2x2(), EdMode::unit(), s).degree);
  auto qs = make_variety(indexed_names("x", 4), {"(-x0 - I*x1)^2 + 2*(x2 + I*x3)^2 + x0^2 + x1^2 + x2^2 + x3^2"}, 1,
                         VarietyKind::Projective);
  CHECK(ed_degree(qs, EdMode::unit(), s).degree == 1);
}

TEST_CASE("counts are stable across three seeds") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    TrackerSettings s;
    s.seed = seed;
    auto d = ed_defect(det2x2(), s, 3);
    CHECK(d.generic.degree == 6);
    CHECK(d.unit.degree == 2);
    CHECK(d.defect >= 0);
  }
}
