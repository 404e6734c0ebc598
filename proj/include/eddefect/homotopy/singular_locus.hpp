#pragma once

#include <vector>

#include "eddefect/critical/critical_system.hpp"
#include "eddefect/homotopy/solve.hpp"

namespace eddefect {

/// Points of P^n where the projective variety `v` meets the isotropic
/// quadric non-transversally, as representatives with largest coordinate
/// equal to 1. Throws PositiveDimensional when that locus is not finite
/// (detected by a random hyperplane still meeting it).
std::vector<VectorXc> isolated_singularities(const VarietyPresentation& v, const TrackerSettings& settings);

/// Solutions of an overdetermined system on the random patch
/// sum a_i x_i = 1 of its first `num_point_vars` variables (plus the
/// hyperplane sum b_i x_i = 0 when `with_hyperplane`), found by solving a
/// random square subsystem and keeping endpoints that satisfy every
/// equation to relative residual `tol`.
std::vector<VectorXc> solve_overdetermined(const std::vector<CPoly>& equations, std::size_t num_point_vars,
                                           bool with_hyperplane, const TrackerSettings& settings,
                                           double tol = 1e-6);

/// Scales so the coordinate of largest modulus is exactly 1.
VectorXc normalize_projective(const VectorXc& x);

}  // namespace eddefect
