#include "eddefect/poly/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "eddefect/error.hpp"

namespace eddefect {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

std::string to_string(const Domain& domain) {
  switch (domain.kind) {
    case DomainKind::Rational: return "Rational";
    case DomainKind::PrimeField: return "PrimeField(" + std::to_string(domain.prime) + ")";
    case DomainKind::ComplexDouble: return "ComplexDouble";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring::Ring(std::vector<std::string> variables, Domain domain)
    : variables_(std::move(variables)), domain_(domain) {
  std::set<std::string> seen;
  for (const auto& name : variables_) {
    if (!valid_identifier(name)) {
      throw Error(ErrorCategory::InvalidArgument, "invalid variable name '" + name + "'");
    }
    if (name == "I" || name == "sqrt") {
      throw Error(ErrorCategory::InvalidArgument, "variable name '" + name + "' is reserved");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCategory::InvalidArgument, "duplicate variable name '" + name + "'");
    }
  }
  if (domain_.kind == DomainKind::PrimeField &&
      (domain_.prime > (1u << 31) || !is_prime(domain_.prime))) {
    throw Error(ErrorCategory::InvalidArgument,
                "prime field modulus " + std::to_string(domain_.prime) + " is not a prime below 2^31");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, Domain domain) {
  return std::make_shared<const Ring>(std::move(variables), domain);
}

RingPtr with_domain(const RingPtr& ring, Domain domain) {
  if (ring->domain() == domain) return ring;
  return make_ring(ring->variables(), domain);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  auto vars = ring->variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_ring(std::move(vars), ring->domain());
}

std::string fresh_variable_name(const Ring& ring, const std::string& base) {
  if (!ring.index_of(base)) return base;
  for (int k = 0;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!ring.index_of(candidate)) return candidate;
  }
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace eddefect
