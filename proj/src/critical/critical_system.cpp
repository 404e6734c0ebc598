#include "eddefect/critical/critical_system.hpp"

#include "eddefect/util/random.hpp"

namespace eddefect {

std::vector<std::string> auxiliary_names(const Ring& ring, std::size_t count, const std::string& stem) {
  std::vector<std::string> names;
  RingPtr current = std::make_shared<const Ring>(ring);
  for (std::size_t j = 0; j < count; ++j) {
    std::string name = fresh_variable_name(*current, stem + std::to_string(j + 1));
    names.push_back(name);
    current = extend_ring(current, {name});
  }
  return names;
}

std::vector<std::vector<Complex>> random_combination(std::size_t c, std::size_t m, std::uint64_t seed) {
  if (m < c) throw Error(ErrorCategory::InvalidArgument, "fewer generators than the codimension");
  if (m == c) return {};
  Rng rng(seed, "combination");
  std::vector<std::vector<Complex>> out(c, std::vector<Complex>(m));
  for (auto& row : out) {
    for (auto& x : row) x = rng.complex_uniform();
  }
  return out;
}

namespace {

std::vector<CPoly> chosen_generators(const VarietyPresentation& v, const std::vector<std::vector<Complex>>& combo) {
  return combo.empty() ? v.generators : combine(v.generators, combo);
}

}  // namespace

CriticalSystem build_critical_system(const VarietyPresentation& v, const EDData& data) {
  CriticalSystem out;
  out.data = data;
  out.combination = random_combination(v.codim, v.generators.size(), data.seed);
  static_cast<LagrangeSystem<Complex>&>(out) =
      lagrange_system(chosen_generators(v, out.combination), data.weights, data.data);
  return out;
}

SingularLocusSystem singular_locus_system(const VarietyPresentation& v, std::uint64_t seed) {
  if (v.kind != VarietyKind::Projective) {
    throw Error(ErrorCategory::InvalidArgument, "singular locus of X meet Q needs a projective variety");
  }
  const std::size_t n = v.num_vars();
  const std::size_t c = v.codim;
  auto chosen = chosen_generators(v, random_combination(c, v.generators.size(), derive_seed(seed, "singular")));
  auto q = weighted_quadric(v.numeric_ring, std::vector<Complex>(n, 1.0));

  SingularLocusSystem out;
  out.num_point_vars = n;
  std::vector<std::vector<CPoly>> matrix;
  for (const auto& g : chosen) {
    std::vector<CPoly> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(g.differentiate(i));
    matrix.push_back(std::move(row));
  }
  {
    std::vector<CPoly> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(q.differentiate(i));
    matrix.push_back(std::move(row));
  }

  if (c + 1 <= 3) {
    out.ring = v.numeric_ring;
    out.equations = v.generators;
    out.equations.push_back(q);
    for (auto& m : maximal_minors(matrix)) {
      if (!m.is_zero()) out.equations.push_back(std::move(m));
    }
    return out;
  }

  out.num_kernel_vars = c + 1;
  out.ring = extend_ring(v.numeric_ring, auxiliary_names(*v.numeric_ring, c + 1, "k"));
  for (const auto& g : v.generators) out.equations.push_back(embed(g, out.ring));
  out.equations.push_back(embed(q, out.ring));
  for (std::size_t i = 0; i < n; ++i) {
    CPoly eq(out.ring);
    for (std::size_t j = 0; j <= c; ++j) eq += CPoly::variable(out.ring, n + j) * embed(matrix[j][i], out.ring);
    out.equations.push_back(std::move(eq));
  }
  Rng rng(seed, "kernel-normalization");
  CPoly norm = CPoly::constant(out.ring, Complex(-1.0));
  for (std::size_t j = 0; j <= c; ++j) norm += CPoly::variable(out.ring, n + j).scaled(rng.complex_uniform());
  out.equations.push_back(std::move(norm));
  return out;
}

}  // namespace eddefect
