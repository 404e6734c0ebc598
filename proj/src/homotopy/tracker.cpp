#include "eddefect/homotopy/tracker.hpp"

#include <cmath>
#include <numbers>

#include "eddefect/util/random.hpp"

namespace eddefect {

void TrackerSettings::validate() const {
  if (!(min_step > 0 && min_step <= initial_step && initial_step <= max_step && max_step < 1)) {
    throw Error(ErrorCategory::InvalidArgument, "step sizes must satisfy 0 < min <= initial <= max < 1");
  }
  if (!(newton_tol > 0 && dedup_tol > 0 && infinity_threshold > 0) || max_newton_iters < 1) {
    throw Error(ErrorCategory::InvalidArgument, "tracker tolerances must be positive");
  }
}

const char* to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Converged: return "converged";
    case PathStatus::Diverged: return "diverged";
    case PathStatus::Stalled: return "stalled";
  }
  return "unknown";
}

VectorXc StartSystem::solution(std::uint64_t index) const {
  VectorXc x(static_cast<Eigen::Index>(degrees.size()));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const unsigned d = degrees[i];
    const std::uint64_t k = index % d;
    index /= d;
    const double radius = std::pow(std::abs(constants[i]), 1.0 / d);
    const double angle = (std::arg(constants[i]) + 2.0 * std::numbers::pi * static_cast<double>(k)) / d;
    x[static_cast<Eigen::Index>(i)] = std::polar(radius, angle);
  }
  return x;
}

StartSystem total_degree_start(const std::vector<CPoly>& target, std::uint64_t seed, std::uint64_t max_paths) {
  if (target.empty()) throw Error(ErrorCategory::InvalidArgument, "empty system");
  if (target.size() != target.front().ring()->size()) {
    throw Error(ErrorCategory::InvalidArgument, "system is not square: " + std::to_string(target.size()) +
                                                    " equations in " +
                                                    std::to_string(target.front().ring()->size()) + " unknowns");
  }
  StartSystem start;
  Rng rng(seed, "start-constants");
  start.num_paths = 1;
  for (const auto& f : target) {
    if (f.is_zero()) throw Error(ErrorCategory::InvalidArgument, "system contains the zero equation");
    const auto d = static_cast<unsigned>(f.total_degree());
    start.degrees.push_back(d);
    start.constants.push_back(rng.unit_complex());
    if (d == 0) {
      start.num_paths = 0;
    } else if (start.num_paths > max_paths / d) {
      throw Error(ErrorCategory::BezoutOverflow, "Bezout number exceeds the path cap of " + std::to_string(max_paths));
    } else {
      start.num_paths *= d;
    }
  }
  if (start.num_paths > max_paths) {
    throw Error(ErrorCategory::BezoutOverflow, "Bezout number exceeds the path cap of " + std::to_string(max_paths));
  }
  if (std::find(start.degrees.begin(), start.degrees.end(), 0u) != start.degrees.end()) start.num_paths = 0;
  return start;
}

namespace {

CPoly homogenize(const CPoly& f, unsigned degree, const RingPtr& ring_h) {
  const std::size_t n = f.ring()->size();
  std::vector<Term<Complex>> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial.padded(n + 1);
    m.set(n, degree - t.monomial.degree());
    terms.push_back({std::move(m), t.coeff});
  }
  return CPoly(ring_h, std::move(terms));
}

Complex patch_value(const VectorXc& patch, const VectorXc& X) { return patch.cwiseProduct(X).sum(); }

}  // namespace

Homotopy::Homotopy(const std::vector<CPoly>& target, std::uint64_t seed, std::uint64_t max_paths)
    : start_(total_degree_start(target, seed, max_paths)), affine_target_(target) {
  n_ = target.size();
  const RingPtr& ring = target.front().ring();
  const RingPtr ring_h = extend_ring(ring, {fresh_variable_name(*ring, "h")});
  std::vector<CPoly> fh, gh;
  for (std::size_t i = 0; i < n_; ++i) {
    const unsigned d = start_.degrees[i];
    fh.push_back(homogenize(target[i], d, ring_h));
    gh.push_back(CPoly::term(ring_h, Monomial::variable(n_ + 1, i, d), Complex(1.0)) -
                 CPoly::term(ring_h, Monomial::variable(n_ + 1, n_, d), start_.constants[i]));
  }
  target_h_ = CompiledSystem(fh);
  start_h_ = CompiledSystem(gh);
  Rng rng(seed, "gamma");
  gamma_ = rng.unit_complex();
  Rng patch_rng(seed, "patch");
  patch_.resize(static_cast<Eigen::Index>(n_ + 1));
  for (Eigen::Index i = 0; i <= static_cast<Eigen::Index>(n_); ++i) patch_[i] = patch_rng.complex_uniform();
}

void Homotopy::evaluate(const VectorXc& X, double t, VectorXc& H, MatrixXc& HX, VectorXc* Ht) const {
  const auto n = static_cast<Eigen::Index>(n_);
  VectorXc F, G;
  MatrixXc FX, GX;
  target_h_.evaluate(X, F, &FX);
  start_h_.evaluate(X, G, &GX);
  const Complex a = gamma_ * (1.0 - t);
  H.resize(n + 1);
  HX.resize(n + 1, n + 1);
  H.head(n) = a * G + t * F;
  H[n] = patch_value(patch_, X) - 1.0;
  HX.topRows(n) = a * GX + t * FX;
  HX.row(n) = patch_.transpose();
  if (Ht != nullptr) {
    Ht->resize(n + 1);
    Ht->head(n) = F - gamma_ * G;
    (*Ht)[n] = 0.0;
  }
}

bool Homotopy::correct(VectorXc& X, double t, const TrackerSettings& s) const {
  VectorXc H;
  MatrixXc HX;
  const double scale = std::max(1.0, X.norm());
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < s.max_newton_iters; ++k) {
    evaluate(X, t, H, HX, nullptr);
    Eigen::PartialPivLU<MatrixXc> lu(HX);
    if (!(lu.rcond() > 1e-14)) return false;
    VectorXc delta = lu.solve(H);
    if (!delta.allFinite()) return false;
    const double size = delta.norm();
    // a large first correction or weak contraction means the prediction
    // landed in the basin of a neighbouring path
    if (k == 0 && size > 0.1 * scale) return false;
    if (k > 0 && size > 0.25 * previous) return false;
    X -= delta;
    if (size <= 1e-10 * scale) return true;
    previous = size;
  }
  return previous <= 1e-8 * scale;
}

VectorXc Homotopy::tangent(const VectorXc& X, double t, bool& ok) const {
  VectorXc H, Ht;
  MatrixXc HX;
  evaluate(X, t, H, HX, &Ht);
  Eigen::PartialPivLU<MatrixXc> lu(HX);
  ok = ok && lu.rcond() > 1e-14;
  VectorXc v = -lu.solve(Ht);
  ok = ok && v.allFinite();
  return v;
}

double Homotopy::refine(VectorXc& x, int max_iters, double tol) const {
  double res = affine_target_.relative_residual(x);
  VectorXc F;
  MatrixXc J;
  for (int k = 0; k < max_iters && res > tol; ++k) {
    affine_target_.evaluate(x, F, &J);
    Eigen::PartialPivLU<MatrixXc> lu(J);
    if (!(lu.rcond() > 1e-16)) break;
    VectorXc next = x - lu.solve(F);
    if (!next.allFinite()) break;
    const double r = affine_target_.relative_residual(next);
    if (!(r < res)) break;
    x = std::move(next);
    res = r;
  }
  return res;
}

PathOutcome Homotopy::track(const VectorXc& start_point, const TrackerSettings& s) const {
  const auto n = static_cast<Eigen::Index>(n_);
  VectorXc X(n + 1);
  X.head(n) = start_point;
  X[n] = 1.0;
  X /= patch_value(patch_, X);

  PathOutcome out;
  double t = 0.0;
  double dt = s.initial_step;
  int successes = 0;
  // (1 - t, |h| / |X|) at accepted steps late in the path
  std::vector<std::pair<double, double>> history;

  bool stalled = false;
  while (t < 1.0) {
    if (out.steps_taken >= s.max_steps) {
      stalled = true;
      break;
    }
    const double step = std::min(dt, 1.0 - t);
    const double t_next = (step == 1.0 - t) ? 1.0 : t + step;
    bool ok = true;
    const VectorXc k1 = tangent(X, t, ok);
    const VectorXc k2 = tangent(X + 0.5 * step * k1, t + 0.5 * step, ok);
    const VectorXc k3 = tangent(X + 0.5 * step * k2, t + 0.5 * step, ok);
    const VectorXc k4 = tangent(X + step * k3, t_next, ok);
    VectorXc candidate = X + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (ok && candidate.allFinite() && correct(candidate, t_next, s)) {
      X = std::move(candidate);
      t = t_next;
      ++out.steps_taken;
      if (++successes >= 4) {
        dt = std::min(2.0 * dt, s.max_step);
        successes = 0;
      }
      if (t > 0.9 && t < 1.0) history.emplace_back(1.0 - t, std::abs(X[n]) / X.norm());
    } else {
      dt /= 2.0;
      successes = 0;
      if (dt < s.min_step) {
        stalled = true;
        break;
      }
    }
  }
  out.t_reached = t;

  const double h = std::abs(X[n]);
  const double coord = X.head(n).cwiseAbs().maxCoeff();
  const double affine_norm = h == 0.0 ? std::numeric_limits<double>::infinity() : coord / h;
  if (affine_norm > s.infinity_threshold) {
    out.status = PathStatus::Diverged;
    return out;
  }
  out.point = X.head(n) / X[n];
  out.final_residual = refine(out.point, 20, 1e-13);
  if (!stalled && out.final_residual <= s.newton_tol) {
    out.status = PathStatus::Converged;
    return out;
  }

  // A path that cannot finish but whose homogenizing coordinate decays like
  // a power of (1 - t) is heading to infinity.
  if (history.size() >= 4 && history.back().second < 1e-2) {
    const auto& a = history[history.size() - 4];
    const auto& b = history.back();
    if (a.first > b.first && a.second > 0 && b.second > 0) {
      const double slope = std::log(a.second / b.second) / std::log(a.first / b.first);
      if (slope > 0.1) {
        out.status = PathStatus::Diverged;
        out.point.resize(0);
        return out;
      }
    }
  }
  out.status = PathStatus::Stalled;
  return out;
}

std::size_t numerical_rank(const MatrixXc& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<MatrixXc> qr(m);
  qr.setThreshold(threshold);
  return static_cast<std::size_t>(qr.rank());
}

}  // namespace eddefect
