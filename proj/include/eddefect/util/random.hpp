#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace eddefect {

/// Decorrelated child seed for one purpose ("data", "gamma", ...), so that
/// every random draw in a run is a pure function of the user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose);

/// Seeded generator with platform-independent conversions (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view purpose) : engine_(derive_seed(seed, purpose)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Real and imaginary parts independent and uniform in [-1, 1].
  std::complex<double> complex_uniform() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

  /// complex_uniform() resampled until |z| >= min_abs.
  std::complex<double> complex_uniform_clamped(double min_abs);

  /// Uniform on the unit circle.
  std::complex<double> unit_complex();

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eddefect
