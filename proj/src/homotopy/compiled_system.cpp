#include "eddefect/homotopy/compiled_system.hpp"

#include <algorithm>

namespace eddefect {

CompiledSystem::CompiledSystem(const std::vector<CPoly>& polys) {
  if (polys.empty()) return;
  num_vars_ = polys.front().ring()->size();
  max_exponent_.assign(num_vars_, 0);
  for (const auto& p : polys) {
    if (p.ring()->size() != num_vars_) throw Error(ErrorCategory::RingMismatch, "equations in different rings");
    std::vector<CompiledTerm> terms;
    for (const auto& t : p.terms()) {
      CompiledTerm ct{t.coeff, {}};
      for (std::size_t v = 0; v < num_vars_; ++v) {
        if (t.monomial[v] == 0) continue;
        ct.factors.emplace_back(v, t.monomial[v]);
        max_exponent_[v] = std::max(max_exponent_[v], t.monomial[v]);
      }
      terms.push_back(std::move(ct));
    }
    equations_.push_back(std::move(terms));
    degrees_.push_back(p.is_zero() ? 0u : static_cast<unsigned>(p.total_degree()));
  }
}

std::vector<std::vector<Complex>> CompiledSystem::powers(const VectorXc& x) const {
  std::vector<std::vector<Complex>> pw(num_vars_);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    pw[v].resize(max_exponent_[v] + 1);
    pw[v][0] = 1.0;
    for (unsigned k = 1; k <= max_exponent_[v]; ++k) pw[v][k] = pw[v][k - 1] * x[static_cast<Eigen::Index>(v)];
  }
  return pw;
}

void CompiledSystem::evaluate(const VectorXc& x, VectorXc& values, MatrixXc* jacobian) const {
  const auto pw = powers(x);
  const auto m = static_cast<Eigen::Index>(equations_.size());
  values.setZero(m);
  if (jacobian != nullptr) jacobian->setZero(m, static_cast<Eigen::Index>(num_vars_));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (const auto& t : equations_[static_cast<std::size_t>(i)]) {
      Complex value = t.coeff;
      for (const auto& [v, e] : t.factors) value *= pw[v][e];
      values[i] += value;
      if (jacobian == nullptr) continue;
      for (std::size_t a = 0; a < t.factors.size(); ++a) {
        const auto [va, ea] = t.factors[a];
        Complex d = t.coeff * static_cast<double>(ea) * pw[va][ea - 1];
        for (std::size_t b = 0; b < t.factors.size(); ++b) {
          if (b != a) d *= pw[t.factors[b].first][t.factors[b].second];
        }
        (*jacobian)(i, static_cast<Eigen::Index>(va)) += d;
      }
    }
  }
}

double CompiledSystem::relative_residual(const VectorXc& x) const {
  const auto pw = powers(x);
  double worst = 0.0;
  for (const auto& eq : equations_) {
    Complex sum = 0.0;
    double scale = 0.0;
    for (const auto& t : eq) {
      Complex value = t.coeff;
      for (const auto& [v, e] : t.factors) value *= pw[v][e];
      sum += value;
      scale += std::abs(value);
    }
    worst = std::max(worst, std::abs(sum) / std::max(1.0, scale));
  }
  return worst;
}

}  // namespace eddefect
