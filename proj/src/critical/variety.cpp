#include "eddefect/critical/variety.hpp"

#include "eddefect/poly/parser.hpp"
#include "eddefect/util/random.hpp"

namespace eddefect {

std::string to_string(VarietyKind kind) { return kind == VarietyKind::Projective ? "projective" : "affine"; }

std::string to_string(const EdMode& mode) {
  switch (mode.kind) {
    case EdMode::Unit: return "unit";
    case EdMode::Generic: return "generic";
    case EdMode::Weighted: return "weighted";
  }
  return "unknown";
}

VarietyPresentation make_variety(const std::vector<std::string>& variables, const std::vector<std::string>& generators,
                                 std::size_t codim, VarietyKind kind) {
  if (variables.empty()) throw Error(ErrorCategory::InvalidArgument, "no variables declared");
  if (generators.empty()) throw Error(ErrorCategory::InvalidArgument, "no generators given");

  VarietyPresentation v;
  v.exact_ring = make_ring(variables, Domain::rational());
  v.numeric_ring = with_domain(v.exact_ring, Domain::complex_double());
  v.codim = codim;
  v.kind = kind;
  v.sources = generators;

  std::vector<QPoly> exact;
  bool all_exact = true;
  for (const auto& text : generators) {
    v.generators.push_back(parse_polynomial<Complex>(text, v.numeric_ring));
    if (!all_exact) continue;
    try {
      exact.push_back(parse_polynomial<GaussianRational>(text, v.exact_ring));
    } catch (const ParseError& e) {
      if (e.category() != ErrorCategory::NotExact) throw;
      all_exact = false;
    }
  }
  if (all_exact) v.exact = std::move(exact);

  if (codim < 1 || codim > v.num_vars() || (kind == VarietyKind::Affine && codim > v.ambient_dim())) {
    throw Error(ErrorCategory::InvalidArgument, "codimension " + std::to_string(codim) + " out of range");
  }
  if (kind == VarietyKind::Projective) {
    for (std::size_t i = 0; i < v.generators.size(); ++i) {
      if (!v.generators[i].is_homogeneous()) {
        throw Error(ErrorCategory::InvalidArgument, "generator '" + generators[i] + "' of a projective variety is not homogeneous");
      }
    }
  }
  return v;
}

std::vector<QPoly> require_exact(const VarietyPresentation& v) {
  if (!v.exact) {
    throw Error(ErrorCategory::NotExact, "variety has generators with non-rational coefficients; exact methods unavailable");
  }
  return *v.exact;
}

QPoly isotropic_quadric(std::size_t n) {
  if (n < 1) throw Error(ErrorCategory::InvalidArgument, "isotropic quadric needs n >= 1");
  auto ring = make_ring(indexed_names("x", n + 1), Domain::rational());
  return weighted_quadric(ring, std::vector<GaussianRational>(n + 1, GaussianRational(1)));
}

EDData draw_ed_data(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed) {
  const std::size_t n = v.num_vars();
  EDData out;
  out.seed = seed;
  Rng data_rng(seed, "data");
  for (std::size_t i = 0; i < n; ++i) out.data.push_back(data_rng.complex_uniform());
  switch (mode.kind) {
    case EdMode::Unit:
      out.weights.assign(n, 1.0);
      break;
    case EdMode::Generic: {
      Rng weight_rng(seed, "weights");
      for (std::size_t i = 0; i < n; ++i) out.weights.push_back(weight_rng.complex_uniform_clamped(0.3));
      break;
    }
    case EdMode::Weighted:
      if (mode.weights.size() != n) {
        throw Error(ErrorCategory::InvalidArgument, "expected " + std::to_string(n) + " weights, got " +
                                                        std::to_string(mode.weights.size()));
      }
      for (const auto& w : mode.weights) {
        if (w.is_zero()) throw Error(ErrorCategory::WeightZero, "weights must be nonzero");
        out.weights.push_back(w.to_complex());
      }
      break;
  }
  return out;
}

VarietyPresentation slice_with_generic_linear(const VarietyPresentation& v, std::size_t k, std::uint64_t seed) {
  if (static_cast<long>(k) > v.dim()) {
    throw Error(ErrorCategory::InvalidArgument, "cannot slice a variety of dimension " + std::to_string(v.dim()) +
                                                    " with " + std::to_string(k) + " hyperplanes");
  }
  VarietyPresentation out = v;
  out.codim += k;
  Rng rng(seed, "slice");
  auto coefficient = [&rng] {
    for (;;) {
      GaussianRational c(rng.integer(-9, 9), rng.integer(-9, 9));
      if (!c.is_zero()) return c;
    }
  };
  const std::size_t n = v.num_vars();
  for (std::size_t s = 0; s < k; ++s) {
    QPoly form(v.exact_ring);
    for (std::size_t i = 0; i < n; ++i) form += QPoly::variable(v.exact_ring, i).scaled(coefficient());
    if (v.kind == VarietyKind::Affine) form += QPoly::constant(v.exact_ring, coefficient());
    out.sources.push_back(form.to_string());
    out.generators.push_back(to_complex(form, v.numeric_ring));
    if (out.exact) out.exact->push_back(form);
  }
  return out;
}

}  // namespace eddefect
