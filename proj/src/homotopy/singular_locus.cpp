#include "eddefect/homotopy/singular_locus.hpp"

#include "eddefect/util/random.hpp"

namespace eddefect {

VectorXc normalize_projective(const VectorXc& x) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  }
  VectorXc y = x / x[best];
  y[best] = 1.0;
  return y;
}

std::vector<VectorXc> solve_overdetermined(const std::vector<CPoly>& equations, std::size_t num_point_vars,
                                           bool with_hyperplane, const TrackerSettings& settings, double tol) {
  if (equations.empty()) throw Error(ErrorCategory::InvalidArgument, "no equations");
  const RingPtr& ring = equations.front().ring();
  const std::size_t m = ring->size();
  Rng rng(settings.seed, with_hyperplane ? "overdetermined-sliced" : "overdetermined");

  std::vector<CPoly> fixed;
  CPoly patch = CPoly::constant(ring, Complex(-1.0));
  for (std::size_t i = 0; i < num_point_vars; ++i) patch += CPoly::variable(ring, i).scaled(rng.complex_uniform());
  fixed.push_back(patch);
  if (with_hyperplane) {
    CPoly plane(ring);
    for (std::size_t i = 0; i < num_point_vars; ++i) plane += CPoly::variable(ring, i).scaled(rng.complex_uniform());
    fixed.push_back(plane);
  }
  if (equations.size() + fixed.size() < m) {
    throw Error(ErrorCategory::PositiveDimensional, "fewer equations than unknowns");
  }

  std::vector<CPoly> square;
  const std::size_t need = m - fixed.size();
  if (equations.size() == need) {
    square = equations;
  } else {
    for (std::size_t k = 0; k < need; ++k) {
      CPoly combo(ring);
      for (const auto& e : equations) combo += e.scaled(rng.complex_uniform());
      square.push_back(std::move(combo));
    }
  }
  square.insert(square.end(), fixed.begin(), fixed.end());

  TrackerSettings s = settings;
  s.seed = rng.next();
  Homotopy homotopy(square, s.seed, s.max_paths);
  auto outcomes = track_all(homotopy, s);

  std::vector<CPoly> all = equations;
  all.insert(all.end(), fixed.begin(), fixed.end());
  CompiledSystem check(all);
  std::vector<VectorXc> out;
  for (const auto& o : outcomes) {
    if (o.point.size() == 0) continue;
    if (o.status == PathStatus::Stalled && o.t_reached < 0.99) continue;
    if (check.relative_residual(o.point) > tol) continue;
    bool duplicate = false;
    for (const auto& p : out) duplicate = duplicate || same_point(p, o.point, 1e-4);
    if (!duplicate) out.push_back(o.point);
  }
  return out;
}

std::vector<VectorXc> isolated_singularities(const VarietyPresentation& v, const TrackerSettings& settings) {
  const auto sys = singular_locus_system(v, settings.seed);
  const auto n = static_cast<Eigen::Index>(v.num_vars());

  TrackerSettings sliced = settings;
  sliced.seed = derive_seed(settings.seed, "slice-test");
  if (!solve_overdetermined(sys.equations, v.num_vars(), true, sliced).empty()) {
    throw Error(ErrorCategory::PositiveDimensional,
                "the non-transversal locus of X and the isotropic quadric is not finite");
  }

  std::vector<VectorXc> points;
  for (const auto& full : solve_overdetermined(sys.equations, v.num_vars(), false, settings)) {
    VectorXc p = normalize_projective(full.head(n));
    bool duplicate = false;
    for (const auto& q : points) duplicate = duplicate || same_point(p, q, 1e-4);
    if (!duplicate) points.push_back(std::move(p));
  }
  return points;
}

}  // namespace eddefect
