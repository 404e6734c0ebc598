#include "eddefect/poly/monomial.hpp"

#include <algorithm>
#include <limits>

#include "eddefect/error.hpp"

namespace eddefect {

namespace {

std::uint16_t checked(unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCategory::InvalidArgument, "exponent overflow");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial::Monomial(std::span<const unsigned> exps) {
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  std::uint16_t v = checked(e);
  degree_ = degree_ - exps_[i] + v;
  exps_[i] = v;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = checked(static_cast<unsigned>(a.exps_[i]) + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::padded(std::size_t num_vars) const {
  Monomial r = *this;
  r.exps_.resize(num_vars, 0);
  return r;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering local_antigraded_lex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return b.degree() <=> a.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace eddefect
