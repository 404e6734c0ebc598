#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eddefect/homotopy/compiled_system.hpp"

namespace eddefect {

struct TrackerSettings {
  double newton_tol = 1e-10;  // relative residual an endpoint must reach
  int max_newton_iters = 8;
  double initial_step = 0.05;
  double min_step = 1e-7;
  double max_step = 0.1;
  double infinity_threshold = 1e8;  // on the affine coordinate norm
  double dedup_tol = 1e-6;          // relative
  std::uint64_t seed = 1;
  std::uint64_t max_paths = 10'000'000;
  unsigned threads = 1;
  std::size_t max_steps = 100'000;

  /// Throws InvalidArgument unless 0 < min_step <= initial_step <= max_step < 1
  /// and tolerances are positive.
  void validate() const;
};

/// z_i^{d_i} - r_i with d_i the degree of target equation i.
struct StartSystem {
  std::vector<unsigned> degrees;
  std::vector<Complex> constants;
  std::uint64_t num_paths = 0;

  /// Start solution number `index` (mixed-radix enumeration of the roots).
  VectorXc solution(std::uint64_t index) const;
};

/// Throws BezoutOverflow when the product of degrees exceeds max_paths, and
/// InvalidArgument for non-square systems or zero equations.
StartSystem total_degree_start(const std::vector<CPoly>& target, std::uint64_t seed,
                               std::uint64_t max_paths = 10'000'000);

enum class PathStatus { Converged, Diverged, Stalled };

const char* to_string(PathStatus s);

struct PathOutcome {
  PathStatus status = PathStatus::Stalled;
  VectorXc point;  // affine coordinates; empty when the path went to infinity
  std::size_t steps_taken = 0;
  double final_residual = 0.0;
  double t_reached = 0.0;
};

/// H(X, t) = gamma (1 - t) G(X) + t F(X) on homogenized equations, plus a
/// random affine patch a . X = 1, so paths heading to infinity stay
/// bounded and end with the homogenizing coordinate near 0. All randomness
/// (gamma, patch, start constants) is fixed at construction.
class Homotopy {
 public:
  Homotopy(const std::vector<CPoly>& target, std::uint64_t seed, std::uint64_t max_paths = 10'000'000);

  const StartSystem& start() const { return start_; }
  const CompiledSystem& target() const { return affine_target_; }
  Complex gamma() const { return gamma_; }

  /// Runge-Kutta predictor, Newton corrector; the step halves on corrector
  /// failure and doubles after 4 consecutive successes. Endpoints are
  /// refined by Newton on the affine target.
  PathOutcome track(const VectorXc& start_point, const TrackerSettings& settings) const;

  /// Newton on the affine target; returns the relative residual reached.
  double refine(VectorXc& x, int max_iters, double tol) const;

 private:
  void evaluate(const VectorXc& X, double t, VectorXc& H, MatrixXc& HX, VectorXc* Ht) const;
  bool correct(VectorXc& X, double t, const TrackerSettings& s) const;
  VectorXc tangent(const VectorXc& X, double t, bool& ok) const;

  std::size_t n_ = 0;
  StartSystem start_;
  CompiledSystem affine_target_;
  CompiledSystem target_h_;
  CompiledSystem start_h_;
  Complex gamma_;
  VectorXc patch_;
};

/// Numerical rank by column-pivoted QR, pivots below threshold * largest
/// pivot counting as zero.
std::size_t numerical_rank(const MatrixXc& m, double threshold = 1e-6);

}  // namespace eddefect
