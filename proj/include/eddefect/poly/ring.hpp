#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eddefect {

enum class DomainKind { Rational, PrimeField, ComplexDouble };

/// Coefficient domain of a ring. `Rational` is the Gaussian rationals Q(i):
/// plain rationals plus the imaginary unit `I`, which several inputs need
/// exactly (isotropic points, the quadric surface example).
struct Domain {
  DomainKind kind = DomainKind::Rational;
  std::uint32_t prime = 0;

  static Domain rational() { return {DomainKind::Rational, 0}; }
  static Domain prime_field(std::uint32_t p) { return {DomainKind::PrimeField, p}; }
  static Domain complex_double() { return {DomainKind::ComplexDouble, 0}; }

  friend bool operator==(const Domain&, const Domain&) = default;
};

std::string to_string(const Domain& domain);

bool is_prime(std::uint64_t n);

/// Ordered variable names plus a coefficient domain. Immutable; shared by
/// every polynomial built over it.
class Ring {
 public:
  /// Throws InvalidArgument on duplicate, empty, reserved (`I`, `sqrt`) or
  /// malformed names, and when a prime-field modulus is not prime.
  Ring(std::vector<std::string> variables, Domain domain);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  const Domain& domain() const noexcept { return domain_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.domain_ == b.domain_ && a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
  Domain domain_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Domain domain);

/// Same variables, different coefficient domain.
RingPtr with_domain(const RingPtr& ring, Domain domain);

/// Appends variables; throws InvalidArgument on clashes.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

/// Returns `base` if it is not already a variable of `ring`, else `base`
/// with a numeric suffix appended until it is fresh.
std::string fresh_variable_name(const Ring& ring, const std::string& base);

/// x0, x1, ..., x{n-1}
std::vector<std::string> indexed_names(const std::string& stem, std::size_t n);

}  // namespace eddefect
