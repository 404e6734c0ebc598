#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eddefect/critical/critical_system.hpp"
#include "eddefect/homotopy/solve.hpp"

namespace eddefect {

struct EdCountRun {
  std::uint64_t seed = 0;
  std::size_t count = 0;          // critical points on the smooth locus
  std::size_t raw_solutions = 0;  // distinct solutions before filtering
  PathSummary summary;
  std::vector<VectorXc> critical_points;  // point coordinates only
};

struct EdDegreeResult {
  std::size_t degree = 0;
  std::vector<EdCountRun> runs;
};

/// True when every generator vanishes at x (relative residual <= tol), the
/// generator Jacobian has numerical rank codim, and x is not the origin of
/// the cone.
bool on_smooth_locus(const VarietyPresentation& v, const VectorXc& x, double tol = 1e-6);

/// One count with data, combinations and homotopy randomness from `seed`.
EdCountRun count_critical_points(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                 const TrackerSettings& settings);

/// Counts with `runs` seeds (the first is settings.seed); UnstableCount if
/// any two disagree.
EdDegreeResult ed_degree(const VarietyPresentation& v, const EdMode& mode, const TrackerSettings& settings,
                         std::size_t runs = 2);

struct EdDefectResult {
  EdDegreeResult generic;
  EdDegreeResult unit;
  long defect = 0;
};

EdDefectResult ed_defect(const VarietyPresentation& v, const TrackerSettings& settings, std::size_t runs = 2);

/// Seed used for run k of a multi-run count.
std::uint64_t run_seed(std::uint64_t base, std::size_t k);

}  // namespace eddefect
