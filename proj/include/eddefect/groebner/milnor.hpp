#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eddefect/critical/variety.hpp"
#include "eddefect/poly/polynomial.hpp"

namespace eddefect {

inline constexpr unsigned kDefaultMilnorCap = 50;

struct MilnorResult {
  std::size_t mu = 0;
  std::vector<Monomial> standard_monomials;  // basis of the local algebra
};

/// Standard basis of the ideal in the localization at the origin, for the
/// local anti-graded order (Mora's tangent cone algorithm). Not reduced.
std::vector<QPoly> local_standard_basis(const std::vector<QPoly>& gens, std::size_t max_pairs = 20000);

/// dim_C of O_0 / I. Throws NonIsolatedOrCapExceeded when the quotient is
/// infinite-dimensional or needs monomials of degree above `cap`.
MilnorResult local_algebra_dimension(const std::vector<QPoly>& ideal, unsigned cap = kDefaultMilnorCap);

/// Milnor number of g at the origin: dimension of the local algebra of the
/// Jacobian ideal. Throws NotSingular unless g and all partials vanish at 0.
MilnorResult milnor_number(const QPoly& g, unsigned cap = kDefaultMilnorCap);

/// Exact representative of a numerical projective point: scaled so the
/// largest coordinate is 1, then each part rationalized. Throws NotExact
/// when no fraction with denominator <= max_denominator is within `tol`.
std::vector<GaussianRational> rationalize_point(std::span<const Complex> point, long max_denominator = 1000,
                                                double tol = 1e-6);

enum class MilnorRoute {
  /// Eliminate variables in which generators are linear (X as a graph) and
  /// take the Milnor number of the restricted quadric.
  Graph,
  /// dim O / (F, 2x2 minors of Jac(F, q)) for a hypersurface X = {F = 0};
  /// equals the Milnor number of q on X when X is smooth at the point.
  LeGreuel,
};

/// Milnor number at `point` of the isotropic quadric restricted to the
/// projective variety `v` (which must be smooth there and have exact
/// generators), computed in the affine chart where the point's largest
/// coordinate is 1, with the point moved to the origin.
MilnorResult milnor_at_point(const VarietyPresentation& v, const std::vector<GaussianRational>& point,
                             MilnorRoute route, unsigned cap = kDefaultMilnorCap);

}  // namespace eddefect
