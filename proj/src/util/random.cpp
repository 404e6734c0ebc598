#include "eddefect/util/random.hpp"

#include <cmath>
#include <numbers>

namespace eddefect {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose) {
  std::uint64_t h = splitmix(seed);
  for (char c : purpose) h = splitmix(h ^ static_cast<unsigned char>(c));
  return h;
}

std::complex<double> Rng::complex_uniform_clamped(double min_abs) {
  for (;;) {
    auto z = complex_uniform();
    if (std::abs(z) >= min_abs) return z;
  }
}

std::complex<double> Rng::unit_complex() {
  double theta = uniform(0.0, 2.0 * std::numbers::pi);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace eddefect
