#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eddefect/poly/polynomial.hpp"

namespace eddefect {

enum class MonomialOrderKind { GrRevLex, LocalAntiGradedLex };

struct GroebnerBasis {
  std::vector<FpPoly> generators;  // sorted by descending leading monomial
  MonomialOrderKind order = MonomialOrderKind::GrRevLex;
  bool reduced = false;
};

struct BuchbergerOptions {
  /// Pairs processed before giving up with CapExceeded.
  std::size_t max_pairs = 500000;
};

/// Reduced grevlex Groebner basis over a prime field. Pairs are selected by
/// smallest lcm degree, ties by creation index; useless pairs are dropped
/// with the Gebauer-Moeller criteria.
GroebnerBasis buchberger(const std::vector<FpPoly>& gens, const BuchbergerOptions& options = {});

/// Fully reduced remainder of f modulo `basis` (grevlex).
FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis);

/// Monomials in `num_vars` variables divisible by none of `leading`;
/// nullopt when there are infinitely many. Enumeration stops with
/// CapExceeded after `max_count` monomials.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                                        std::size_t max_count = 10'000'000);

/// Dimension of the quotient ring, nullopt when infinite.
std::optional<std::uint64_t> staircase_count(const GroebnerBasis& gb);
std::optional<std::uint64_t> staircase_count(const std::vector<Monomial>& leading, std::size_t num_vars);

}  // namespace eddefect
