#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "eddefect/error.hpp"
#include "eddefect/poly/ring.hpp"

namespace eddefect {

using Complex = std::complex<double>;

/// Element of Q(i) with arbitrary-precision parts.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Element of Z/pZ; carries its modulus so arithmetic is self-contained.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t prime);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t prime() const noexcept { return prime_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.prime_) s -= a.prime_;
    return raw(s, a.prime_);
  }
  friend Fp operator-(Fp a, Fp b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.prime_ - b.value_, a.prime_);
  }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.prime_),
               a.prime_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend Fp operator-(Fp a) { return raw(a.value_ == 0 ? 0 : a.prime_ - a.value_, a.prime_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp f;
    f.value_ = v;
    f.prime_ = p;
    return f;
  }

  std::uint32_t value_ = 0;
  std::uint32_t prime_ = 0;
};

/// Square root of -1 modulo p when p = 1 (mod 4); nullopt otherwise.
std::optional<Fp> sqrt_minus_one(std::uint32_t p);

/// Exact decimal/integer literal ("12", "0.25", "1e-3") to a rational.
mpq_class parse_rational_literal(const std::string& text);

/// Continued-fraction rationalization with denominator bound.
mpq_class rationalize(double value, long max_denominator);

/// Map a Gaussian rational into F_p; throws NotExact when a denominator
/// vanishes mod p or `i` has no square root there.
Fp to_prime_field(const GaussianRational& value, std::uint32_t p);

/// Printable form of a coefficient: sign split off when the value is a
/// signed real (or signed pure imaginary), magnitude otherwise parenthesized.
struct CoeffRepr {
  bool negative = false;
  std::string magnitude;
};

/// Per-domain hooks used by the generic polynomial code.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<GaussianRational> {
  static constexpr DomainKind kind = DomainKind::Rational;
  static GaussianRational zero(const Ring&) { return {}; }
  static GaussianRational one(const Ring&) { return GaussianRational(1); }
  static GaussianRational from_rational(const mpq_class& q, const Ring&) { return GaussianRational(q); }
  static std::optional<GaussianRational> imaginary_unit(const Ring&) {
    return GaussianRational(mpq_class(0), mpq_class(1));
  }
  static std::optional<GaussianRational> sqrt(const GaussianRational& v);
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
  static CoeffRepr repr(const GaussianRational& v);
};

template <>
struct CoeffTraits<Fp> {
  static constexpr DomainKind kind = DomainKind::PrimeField;
  static Fp zero(const Ring& r) { return Fp(0, r.domain().prime); }
  static Fp one(const Ring& r) { return Fp(1, r.domain().prime); }
  static Fp from_rational(const mpq_class& q, const Ring& r) {
    return to_prime_field(GaussianRational(q), r.domain().prime);
  }
  static std::optional<Fp> imaginary_unit(const Ring& r) { return sqrt_minus_one(r.domain().prime); }
  static std::optional<Fp> sqrt(const Fp&) { return std::nullopt; }
  static bool is_zero(const Fp& v) { return v.is_zero(); }
  /// Symmetric representative: values above p/2 print as negatives.
  static CoeffRepr repr(const Fp& v) {
    if (v.value() > v.prime() / 2) return {true, std::to_string(v.prime() - v.value())};
    return {false, std::to_string(v.value())};
  }
};

template <>
struct CoeffTraits<Complex> {
  static constexpr DomainKind kind = DomainKind::ComplexDouble;
  static Complex zero(const Ring&) { return {0.0, 0.0}; }
  static Complex one(const Ring&) { return {1.0, 0.0}; }
  static Complex from_rational(const mpq_class& q, const Ring&) { return {q.get_d(), 0.0}; }
  static std::optional<Complex> imaginary_unit(const Ring&) { return Complex(0.0, 1.0); }
  static std::optional<Complex> sqrt(const Complex& v) { return std::sqrt(v); }
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& v) { return v; }
  static CoeffRepr repr(const Complex& v);
};

}  // namespace eddefect
