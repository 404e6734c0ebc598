#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eddefect/poly/polynomial.hpp"

namespace eddefect {

enum class VarietyKind { Affine, Projective };

std::string to_string(VarietyKind kind);

/// A variety given by generators, a user-declared codimension and an
/// affine/projective flag. Projective varieties are handled through their
/// affine cone, so `num_vars()` is always the dimension of the space the
/// critical points live in.
///
/// Generators are kept numerically (complex doubles) and, when every
/// coefficient is an exact element of Q(i), exactly as well. Inputs with
/// irrational constants such as sqrt(2) are numeric-only.
struct VarietyPresentation {
  RingPtr exact_ring;    // Domain::rational()
  RingPtr numeric_ring;  // Domain::complex_double()
  std::vector<std::string> sources;
  std::vector<CPoly> generators;
  std::optional<std::vector<QPoly>> exact;
  std::size_t codim = 0;
  VarietyKind kind = VarietyKind::Affine;

  std::size_t num_vars() const { return numeric_ring->size(); }
  const std::vector<std::string>& variables() const { return numeric_ring->variables(); }

  /// n: the affine space C^n, or P^n whose cone is C^(n+1).
  std::size_t ambient_dim() const { return kind == VarietyKind::Projective ? num_vars() - 1 : num_vars(); }

  /// Dimension as an affine or projective variety; -1 when empty.
  long dim() const { return static_cast<long>(ambient_dim()) - static_cast<long>(codim); }
};

/// Parses and validates. Throws ParseError for bad generators and
/// InvalidArgument for an out-of-range codimension or a non-homogeneous
/// generator of a projective variety.
VarietyPresentation make_variety(const std::vector<std::string>& variables, const std::vector<std::string>& generators,
                                 std::size_t codim, VarietyKind kind);

std::vector<QPoly> require_exact(const VarietyPresentation& v);

/// x0^2 + ... + xn^2 over n+1 variables named x0..xn.
QPoly isotropic_quadric(std::size_t n);

/// w0*x0^2 + ... over the variables of `ring`; throws WeightZero.
template <class C>
Polynomial<C> weighted_quadric(const RingPtr& ring, const std::vector<C>& weights) {
  if (weights.size() != ring->size()) throw Error(ErrorCategory::InvalidArgument, "one weight per variable expected");
  Polynomial<C> q(ring);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (CoeffTraits<C>::is_zero(weights[i])) throw Error(ErrorCategory::WeightZero, "weights must be nonzero");
    q += Polynomial<C>::term(ring, Monomial::variable(ring->size(), i, 2), weights[i]);
  }
  return q;
}

/// Which weights the squared-distance objective uses.
struct EdMode {
  enum Kind { Unit, Generic, Weighted } kind = Unit;
  std::vector<GaussianRational> weights;  // only for Weighted

  static EdMode unit() { return {Unit, {}}; }
  static EdMode generic() { return {Generic, {}}; }
  static EdMode weighted(std::vector<GaussianRational> w) { return {Weighted, std::move(w)}; }
};

std::string to_string(const EdMode& mode);

/// Weights w and data u of the objective sum w_i (x_i - u_i)^2.
struct EDData {
  std::vector<Complex> weights;
  std::vector<Complex> data;
  std::uint64_t seed = 0;
};

/// Data u has real and imaginary parts uniform in [-1, 1]; generic weights
/// are drawn the same way with |w_i| >= 0.3. Throws WeightZero and
/// InvalidArgument (wrong weight count).
EDData draw_ed_data(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed);

/// Appends k random linear forms (homogeneous for projective varieties)
/// with small Gaussian-integer coefficients, so exact presentations stay
/// exact. Requires 0 <= k <= dim.
VarietyPresentation slice_with_generic_linear(const VarietyPresentation& v, std::size_t k, std::uint64_t seed);

}  // namespace eddefect
