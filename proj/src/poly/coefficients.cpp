#include "eddefect/poly/coefficients.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace eddefect {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCategory::InvalidArgument, "division by zero");
  mpq_class n = o.norm();
  mpq_class r = (re * o.re + im * o.im) / n;
  mpq_class i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Fp::Fp(std::int64_t value, std::uint32_t prime) : prime_(prime) {
  std::int64_t r = value % static_cast<std::int64_t>(prime);
  if (r < 0) r += prime;
  value_ = static_cast<std::uint32_t>(r);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc(1, prime_);
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw Error(ErrorCategory::InvalidArgument, "inverse of zero in prime field");
  // extended Euclid
  std::int64_t a = value_, m = prime_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, prime_);
}

std::optional<Fp> sqrt_minus_one(std::uint32_t p) {
  if (p % 4 != 1) return std::nullopt;
  // g^((p-1)/4) for a quadratic non-residue g squares to -1
  for (std::uint32_t g = 2; g < p; ++g) {
    Fp candidate = Fp(g, p).pow((p - 1) / 4);
    if (candidate * candidate == Fp(-1, p)) return candidate;
  }
  return std::nullopt;
}

mpq_class parse_rational_literal(const std::string& text) {
  std::size_t pos = 0;
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
    if (text[pos] == '.') {
      if (seen_point) throw Error(ErrorCategory::SyntaxError, "malformed number '" + text + "'");
      seen_point = true;
    } else {
      digits.push_back(text[pos]);
      if (seen_point) --exponent;
    }
    ++pos;
  }
  if (digits.empty()) throw Error(ErrorCategory::SyntaxError, "malformed number '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') {
      throw Error(ErrorCategory::SyntaxError, "malformed number '" + text + "'");
    }
    ++pos;
    std::string rest = text.substr(pos);
    long e = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw Error(ErrorCategory::SyntaxError, "malformed exponent in '" + text + "'");
    }
    exponent += e;
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class q = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  q.canonicalize();
  return q;
}

mpq_class rationalize(double value, long max_denominator) {
  // convergents of the continued fraction
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    mpz_class az(a);
    mpz_class h2 = az * h1 + h0;
    mpz_class k2 = az * k1 + k0;
    if (k2 > max_denominator) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = x - a;
    if (std::abs(frac) < 1e-12) break;
    x = 1.0 / frac;
  }
  if (k1 == 0) return mpq_class(0);
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

namespace {

Fp rational_to_fp(const mpq_class& q, std::uint32_t p) {
  mpz_class pz(p);
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) {
    throw Error(ErrorCategory::NotExact,
                "denominator of " + q.get_str() + " vanishes modulo " + std::to_string(p));
  }
  return Fp(num.get_si(), p) / Fp(den.get_si(), p);
}

}  // namespace

Fp to_prime_field(const GaussianRational& value, std::uint32_t p) {
  Fp re = rational_to_fp(value.re, p);
  if (value.is_real()) return re;
  auto i = sqrt_minus_one(p);
  if (!i) {
    throw Error(ErrorCategory::NotExact,
                "imaginary unit has no square root modulo " + std::to_string(p));
  }
  return re + rational_to_fp(value.im, p) * *i;
}

std::optional<GaussianRational> CoeffTraits<GaussianRational>::sqrt(const GaussianRational& v) {
  if (!v.is_real() || sgn(v.re) < 0) {
    if (v.is_real()) {
      // sqrt(-a) = i sqrt(a)
      auto pos = sqrt(GaussianRational(-v.re));
      if (!pos) return std::nullopt;
      return GaussianRational(mpq_class(0), pos->re);
    }
    return std::nullopt;
  }
  mpz_class n = v.re.get_num(), d = v.re.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return GaussianRational(mpq_class(rn, rd));
}

CoeffRepr CoeffTraits<GaussianRational>::repr(const GaussianRational& v) {
  if (v.is_real()) return {sgn(v.re) < 0, mpq_class(abs(v.re)).get_str()};
  if (sgn(v.re) == 0) {
    mpq_class m = abs(v.im);
    return {sgn(v.im) < 0, m == 1 ? std::string("I") : m.get_str() + "*I"};
  }
  mpq_class m = abs(v.im);
  std::string imag = m == 1 ? std::string("I") : m.get_str() + "*I";
  return {false, "(" + v.re.get_str() + (sgn(v.im) < 0 ? "-" : "+") + imag + ")"};
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

CoeffRepr CoeffTraits<Complex>::repr(const Complex& v) {
  if (v.imag() == 0.0) return {std::signbit(v.real()), shortest(std::abs(v.real()))};
  if (v.real() == 0.0) {
    double m = std::abs(v.imag());
    return {std::signbit(v.imag()), m == 1.0 ? std::string("I") : shortest(m) + "*I"};
  }
  double m = std::abs(v.imag());
  std::string imag = m == 1.0 ? std::string("I") : shortest(m) + "*I";
  return {false, "(" + shortest(v.real()) + (std::signbit(v.imag()) ? "-" : "+") + imag + ")"};
}

}  // namespace eddefect
