#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eddefect/homotopy/tracker.hpp"

namespace eddefect {

struct SolutionDiagnostics {
  double residual = 0.0;  // relative residual after refinement
  std::size_t jacobian_rank = 0;
  double condition = 0.0;  // ratio of extreme singular values of the Jacobian
  std::uint64_t path_index = 0;
};

struct PathSummary {
  std::uint64_t paths = 0;
  std::uint64_t converged = 0;
  std::uint64_t diverged = 0;
  std::uint64_t stalled = 0;
};

struct SolutionSet {
  std::vector<VectorXc> points;  // distinct, in order of first path index
  std::vector<SolutionDiagnostics> diagnostics;
  PathSummary summary;
  std::vector<PathOutcome> outcomes;  // every path, by start-solution index

  std::size_t count() const { return points.size(); }
};

/// Tracks every start solution, `settings.threads` at a time. Outcomes are
/// stored by path index, so the result does not depend on the thread count.
std::vector<PathOutcome> track_all(const Homotopy& homotopy, const TrackerSettings& settings);

/// Total-degree homotopy solve of a square system: converged endpoints,
/// refined and deduplicated. Throws BezoutOverflow.
SolutionSet solve_system(const std::vector<CPoly>& system, const TrackerSettings& settings);

/// |a - b| <= tol * max(1, |a|, |b|)
bool same_point(const VectorXc& a, const VectorXc& b, double tol);

}  // namespace eddefect
