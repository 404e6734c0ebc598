#include "eddefect/groebner/ed_oracle.hpp"

#include "eddefect/critical/critical_system.hpp"
#include "eddefect/util/random.hpp"

namespace eddefect {

namespace {

bool needs_imaginary_unit(const VarietyPresentation& v, const EdMode& mode) {
  for (const auto& g : require_exact(v)) {
    for (const auto& t : g.terms()) {
      if (!t.coeff.is_real()) return true;
    }
  }
  for (const auto& w : mode.weights) {
    if (!w.is_real()) return true;
  }
  return false;
}

}  // namespace

std::uint32_t next_suitable_prime(std::uint32_t from, bool need_sqrt_minus_one) {
  for (std::uint32_t p = std::max<std::uint32_t>(from, 3);; ++p) {
    if (is_prime(p) && (!need_sqrt_minus_one || p % 4 == 1)) return p;
  }
}

std::uint64_t symbolic_ed_degree_run(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                     std::uint32_t prime, const BuchbergerOptions& options) {
  const auto exact = require_exact(v);
  const std::size_t n = v.num_vars();
  const std::size_t c = v.codim;
  if (exact.size() < c) throw Error(ErrorCategory::InvalidArgument, "fewer generators than the codimension");

  const RingPtr ring = make_ring(v.variables(), Domain::prime_field(prime));
  std::vector<FpPoly> gens;
  for (const auto& g : exact) gens.push_back(to_prime_field(g, ring));

  Rng rng(seed, "oracle");
  auto random_unit = [&] { return Fp(static_cast<std::int64_t>(rng.below(prime - 1) + 1), prime); };

  std::vector<FpPoly> chosen = gens;
  if (gens.size() > c) {
    std::vector<std::vector<Fp>> combo(c, std::vector<Fp>(gens.size()));
    for (auto& row : combo) {
      for (auto& x : row) x = random_unit();
    }
    chosen = combine(gens, combo);
  }

  std::vector<Fp> weights(n, Fp(1, prime));
  if (mode.kind == EdMode::Generic) {
    for (auto& w : weights) w = random_unit();
  } else if (mode.kind == EdMode::Weighted) {
    if (mode.weights.size() != n) throw Error(ErrorCategory::InvalidArgument, "one weight per coordinate expected");
    for (std::size_t i = 0; i < n; ++i) {
      weights[i] = to_prime_field(mode.weights[i], prime);
      if (weights[i].is_zero()) throw Error(ErrorCategory::WeightZero, "weight vanishes modulo the prime");
    }
  }
  std::vector<Fp> data(n);
  for (auto& u : data) u = Fp(static_cast<std::int64_t>(rng.below(prime)), prime);

  auto sys = lagrange_system(chosen, weights, data);
  const RingPtr full = extend_ring(sys.ring, {fresh_variable_name(*sys.ring, "z")});
  std::vector<FpPoly> equations;
  for (const auto& e : sys.equations) equations.push_back(embed(e, full));
  if (gens.size() > c) {
    for (const auto& g : gens) equations.push_back(embed(g, full));
  }

  std::vector<std::vector<FpPoly>> jacobian;
  for (const auto& g : chosen) {
    std::vector<FpPoly> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(g.differentiate(i));
    jacobian.push_back(std::move(row));
  }
  FpPoly h(ring);
  for (const auto& m : maximal_minors(jacobian)) h += m.scaled(random_unit());
  FpPoly z = FpPoly::variable(full, full->size() - 1);
  equations.push_back(FpPoly::constant(full, 1) - z * embed(h, full));

  auto count = staircase_count(buchberger(equations, options));
  if (!count) throw Error(ErrorCategory::NotZeroDimensional, "critical ideal is not zero-dimensional");
  return *count;
}

OracleResult symbolic_ed_degree(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                const OracleOptions& options) {
  const bool need_i = needs_imaginary_unit(v, mode);
  const std::uint32_t p1 = options.prime != 0 ? options.prime : next_suitable_prime(32003, need_i);
  const std::uint32_t p2 = next_suitable_prime(p1 + 1, need_i);
  OracleResult result;
  result.runs.push_back({p1, seed, symbolic_ed_degree_run(v, mode, seed, p1, options.buchberger)});
  const std::uint64_t seed2 = derive_seed(seed, "oracle-second-run");
  result.runs.push_back({p2, seed2, symbolic_ed_degree_run(v, mode, seed2, p2, options.buchberger)});
  if (result.runs[0].count != result.runs[1].count) {
    throw Error(ErrorCategory::UnluckyPrimeSuspected,
                "oracle runs disagree: " + std::to_string(result.runs[0].count) + " (p=" + std::to_string(p1) +
                    ") vs " + std::to_string(result.runs[1].count) + " (p=" + std::to_string(p2) + ")");
  }
  result.degree = result.runs[0].count;
  return result;
}

}  // namespace eddefect
