#pragma once

#include <cstdint>
#include <vector>

#include "eddefect/critical/variety.hpp"
#include "eddefect/groebner/buchberger.hpp"

namespace eddefect {

struct OracleRun {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
};

struct OracleResult {
  std::uint64_t degree = 0;
  std::vector<OracleRun> runs;
};

struct OracleOptions {
  /// 0 picks 32003, or the smallest prime >= 32003 that is 1 mod 4 when the
  /// input needs a square root of -1.
  std::uint32_t prime = 0;
  BuchbergerOptions buchberger;
};

/// Critical system of `v` over F_p with random data (and random weights in
/// Generic mode), plus every original generator when there are more than
/// codim of them, plus 1 - z*h where h is a random combination of the
/// c x c minors of the Jacobian of the chosen generators. Returns the
/// staircase count of its grevlex basis. Throws NotZeroDimensional and
/// NotExact (no exact generators, or a coefficient that does not map to F_p).
std::uint64_t symbolic_ed_degree_run(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                     std::uint32_t prime, const BuchbergerOptions& options = {});

/// Two runs with different seeds and primes; UnluckyPrimeSuspected if they
/// disagree.
OracleResult symbolic_ed_degree(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed,
                                const OracleOptions& options = {});

/// Smallest prime >= from (and 1 mod 4 when requested).
std::uint32_t next_suitable_prime(std::uint32_t from, bool need_sqrt_minus_one);

}  // namespace eddefect
