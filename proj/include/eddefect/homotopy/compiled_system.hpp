#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eddefect/poly/polynomial.hpp"

namespace eddefect {

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

/// Polynomial system flattened for fast repeated evaluation of values and
/// Jacobians at complex points. Evaluation has no shared scratch state, so
/// one instance can serve several threads.
class CompiledSystem {
 public:
  CompiledSystem() = default;
  explicit CompiledSystem(const std::vector<CPoly>& polys);

  std::size_t num_equations() const { return equations_.size(); }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }

  /// values (and the Jacobian, when requested) at x.
  void evaluate(const VectorXc& x, VectorXc& values, MatrixXc* jacobian = nullptr) const;

  /// max_i |F_i(x)| / max(1, sum over terms of |c x^a|): a residual that is
  /// insensitive to the scale of coefficients and coordinates.
  double relative_residual(const VectorXc& x) const;

 private:
  struct CompiledTerm {
    Complex coeff;
    std::vector<std::pair<std::size_t, unsigned>> factors;  // (variable, exponent > 0)
  };

  std::vector<std::vector<Complex>> powers(const VectorXc& x) const;

  std::size_t num_vars_ = 0;
  std::vector<std::vector<CompiledTerm>> equations_;
  std::vector<unsigned> degrees_;
  std::vector<unsigned> max_exponent_;
};

}  // namespace eddefect
