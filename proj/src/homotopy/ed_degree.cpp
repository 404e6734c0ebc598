#include "eddefect/homotopy/ed_degree.hpp"

#include "eddefect/util/random.hpp"

namespace eddefect {

std::uint64_t run_seed(std::uint64_t base, std::size_t k) {
  return k == 0 ? base : derive_seed(base, "run" + std::to_string(k));
}

bool on_smooth_locus(const VarietyPresentation& v, const VectorXc& x, double tol) {
  if (v.kind == VarietyKind::Projective && x.norm() <= 1e-8) return false;
  CompiledSystem gens(v.generators);
  if (gens.relative_residual(x) > tol) return false;
  VectorXc values;
  MatrixXc jac;
  gens.evaluate(x, values, &jac);
  return numerical_rank(jac) == v.codim;
}

EdCountRun count_critical_points(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                 const TrackerSettings& settings) {
  auto system = build_critical_system(v, draw_ed_data(v, mode, seed));
  TrackerSettings s = settings;
  s.seed = derive_seed(seed, "homotopy");
  auto solutions = solve_system(system.equations, s);

  EdCountRun run;
  run.seed = seed;
  run.summary = solutions.summary;
  run.raw_solutions = solutions.count();
  const auto n = static_cast<Eigen::Index>(v.num_vars());
  for (const auto& p : solutions.points) {
    VectorXc x = p.head(n);
    if (on_smooth_locus(v, x)) run.critical_points.push_back(std::move(x));
  }
  run.count = run.critical_points.size();
  return run;
}

EdDegreeResult ed_degree(const VarietyPresentation& v, const EdMode& mode, const TrackerSettings& settings,
                         std::size_t runs) {
  EdDegreeResult result;
  for (std::size_t k = 0; k < std::max<std::size_t>(runs, 1); ++k) {
    result.runs.push_back(count_critical_points(v, mode, run_seed(settings.seed, k), settings));
  }
  for (const auto& r : result.runs) {
    if (r.count != result.runs.front().count) {
      std::string counts;
      for (const auto& q : result.runs) counts += (counts.empty() ? "" : ", ") + std::to_string(q.count);
      throw Error(ErrorCategory::UnstableCount, to_string(mode) + " ED degree differs across seeds: " + counts);
    }
  }
  result.degree = result.runs.front().count;
  return result;
}

EdDefectResult ed_defect(const VarietyPresentation& v, const TrackerSettings& settings, std::size_t runs) {
  EdDefectResult r;
  r.generic = ed_degree(v, EdMode::generic(), settings, runs);
  r.unit = ed_degree(v, EdMode::unit(), settings, runs);
  r.defect = static_cast<long>(r.generic.degree) - static_cast<long>(r.unit.degree);
  return r;
}

}  // namespace eddefect
