#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eddefect/critical/variety.hpp"

namespace eddefect {

/// Square Lagrange system in (x, lambda): g_j(x) = 0 and
/// w_i (x_i - u_i) - sum_j lambda_j dg_j/dx_i = 0.
template <class C>
struct LagrangeSystem {
  RingPtr ring;
  std::vector<Polynomial<C>> equations;
  std::vector<Polynomial<C>> chosen;  // g_1..g_c, in the point ring
  std::size_t num_point_vars = 0;
  std::size_t num_multipliers = 0;
};

/// Names `stem1`, `stem2`, ... made fresh against `ring` and each other.
std::vector<std::string> auxiliary_names(const Ring& ring, std::size_t count, const std::string& stem);

/// Row j of `combination` yields sum_k combination[j][k] * gens[k]. Throws
/// DegenerateCombination if a result is zero.
template <class C>
std::vector<Polynomial<C>> combine(const std::vector<Polynomial<C>>& gens,
                                   const std::vector<std::vector<C>>& combination) {
  std::vector<Polynomial<C>> out;
  for (const auto& row : combination) {
    if (row.size() != gens.size()) throw Error(ErrorCategory::InvalidArgument, "combination row has wrong length");
    Polynomial<C> g(gens.front().ring());
    for (std::size_t k = 0; k < gens.size(); ++k) g += gens[k].scaled(row[k]);
    if (g.is_zero()) throw Error(ErrorCategory::DegenerateCombination, "random combination of generators vanished");
    out.push_back(std::move(g));
  }
  return out;
}

template <class C>
LagrangeSystem<C> lagrange_system(const std::vector<Polynomial<C>>& chosen, const std::vector<C>& weights,
                                  const std::vector<C>& data) {
  if (chosen.empty()) throw Error(ErrorCategory::InvalidArgument, "no generators");
  const RingPtr& point_ring = chosen.front().ring();
  const std::size_t n = point_ring->size();
  if (weights.size() != n || data.size() != n) {
    throw Error(ErrorCategory::InvalidArgument, "weights and data need one entry per coordinate");
  }
  for (const auto& w : weights) {
    if (CoeffTraits<C>::is_zero(w)) throw Error(ErrorCategory::WeightZero, "weights must be nonzero");
  }
  LagrangeSystem<C> sys;
  sys.num_point_vars = n;
  sys.num_multipliers = chosen.size();
  sys.chosen = chosen;
  sys.ring = extend_ring(point_ring, auxiliary_names(*point_ring, chosen.size(), "lambda"));
  for (const auto& g : chosen) sys.equations.push_back(embed(g, sys.ring));
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = Polynomial<C>::variable(sys.ring, i);
    auto eq = (xi - Polynomial<C>::constant(sys.ring, data[i])).scaled(weights[i]);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      eq -= Polynomial<C>::variable(sys.ring, n + j) * embed(chosen[j].differentiate(i), sys.ring);
    }
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

/// All k x k minors of a k x m matrix (k <= m), columns in lexicographic
/// subset order.
template <class C>
std::vector<Polynomial<C>> maximal_minors(const std::vector<std::vector<Polynomial<C>>>& rows) {
  const std::size_t k = rows.size();
  if (k == 0) return {};
  const std::size_t m = rows.front().size();
  if (k > m) throw Error(ErrorCategory::InvalidArgument, "matrix has more rows than columns");

  // Laplace expansion along the first row of the submatrix on `cols`.
  auto det = [&](auto&& self, std::size_t row, const std::vector<std::size_t>& cols) -> Polynomial<C> {
    if (cols.size() == 1) return rows[row][cols[0]];
    Polynomial<C> acc(rows[row][cols[0]].ring());
    for (std::size_t a = 0; a < cols.size(); ++a) {
      if (rows[row][cols[a]].is_zero()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t b = 0; b < cols.size(); ++b) {
        if (b != a) rest.push_back(cols[b]);
      }
      auto term = rows[row][cols[a]] * self(self, row + 1, rest);
      acc = a % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
  };

  std::vector<Polynomial<C>> out;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  for (;;) {
    out.push_back(det(det, 0, cols));
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

/// Complex critical system of a variety with its provenance.
struct CriticalSystem : LagrangeSystem<Complex> {
  EDData data;
  std::vector<std::vector<Complex>> combination;  // empty when generators were used directly
};

/// c x m complex matrix, entries uniform in the unit square, or empty when
/// m == c (generators are used as they are).
std::vector<std::vector<Complex>> random_combination(std::size_t c, std::size_t m, std::uint64_t seed);

/// Throws InvalidArgument when there are fewer generators than the codimension.
CriticalSystem build_critical_system(const VarietyPresentation& v, const EDData& data);

/// Equations for the points of the cone over X where X meets the isotropic
/// quadric q non-transversally: all generators, q, and rank [Jac g; grad q] <= c
/// (minors when c + 1 <= 3, otherwise a left-kernel vector k with a random
/// affine normalization). Requires a projective variety.
struct SingularLocusSystem {
  RingPtr ring;
  std::vector<CPoly> equations;
  std::size_t num_point_vars = 0;
  std::size_t num_kernel_vars = 0;
};

SingularLocusSystem singular_locus_system(const VarietyPresentation& v, std::uint64_t seed);

}  // namespace eddefect
