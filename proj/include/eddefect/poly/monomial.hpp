#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace eddefect {

/// Exponent vector with a cached total degree. Entries are 16-bit; products
/// that would overflow throw InvalidArgument.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint16_t, 16>;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, unsigned power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Zero-pads to `num_vars` entries (num_vars >= size()).
  Monomial padded(std::size_t num_vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  Exponents exps_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic: higher degree first, ties broken in favour
/// of the smaller exponent in the last differing variable.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b) noexcept;

/// Local order: lower total degree is larger (so 1 is the largest monomial),
/// ties broken lexicographically.
std::strong_ordering local_antigraded_lex(const Monomial& a, const Monomial& b) noexcept;

}  // namespace eddefect
