#include "eddefect/segre/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "eddefect/error.hpp"

namespace eddefect {

TruncatedBiSeries::TruncatedBiSeries(unsigned deg1, unsigned deg2)
    : deg1_(deg1), deg2_(deg2), coeffs_(static_cast<std::size_t>(deg1 + 1) * (deg2 + 1), 0) {}

TruncatedBiSeries TruncatedBiSeries::constant(unsigned deg1, unsigned deg2, const Integer& c) {
  return monomial(deg1, deg2, 0, 0, c);
}

TruncatedBiSeries TruncatedBiSeries::monomial(unsigned deg1, unsigned deg2, unsigned i, unsigned j, const Integer& c) {
  TruncatedBiSeries f(deg1, deg2);
  if (i <= deg1 && j <= deg2) f.set(i, j, c);
  return f;
}

Integer TruncatedBiSeries::coefficient(unsigned i, unsigned j) const {
  if (i > deg1_ || j > deg2_) return 0;
  return coeffs_[static_cast<std::size_t>(i) * (deg2_ + 1) + j];
}

void TruncatedBiSeries::set(unsigned i, unsigned j, const Integer& c) {
  if (i > deg1_ || j > deg2_) throw Error(ErrorCategory::InvalidArgument, "coefficient beyond the truncation");
  coeffs_[static_cast<std::size_t>(i) * (deg2_ + 1) + j] = c;
}

TruncatedBiSeries TruncatedBiSeries::truncated(unsigned deg1, unsigned deg2) const {
  TruncatedBiSeries f(deg1, deg2);
  for (unsigned i = 0; i <= std::min(deg1, deg1_); ++i) {
    for (unsigned j = 0; j <= std::min(deg2, deg2_); ++j) f.set(i, j, coefficient(i, j));
  }
  return f;
}

TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  TruncatedBiSeries f(std::min(a.deg1_, b.deg1_), std::min(a.deg2_, b.deg2_));
  for (unsigned i = 0; i <= f.deg1_; ++i) {
    for (unsigned j = 0; j <= f.deg2_; ++j) f.set(i, j, a.coefficient(i, j) + b.coefficient(i, j));
  }
  return f;
}

TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  TruncatedBiSeries f(std::min(a.deg1_, b.deg1_), std::min(a.deg2_, b.deg2_));
  for (unsigned i = 0; i <= f.deg1_; ++i) {
    for (unsigned j = 0; j <= f.deg2_; ++j) f.set(i, j, a.coefficient(i, j) - b.coefficient(i, j));
  }
  return f;
}

TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  TruncatedBiSeries f(std::min(a.deg1_, b.deg1_), std::min(a.deg2_, b.deg2_));
  for (unsigned i1 = 0; i1 <= f.deg1_; ++i1) {
    for (unsigned j1 = 0; j1 <= f.deg2_; ++j1) {
      const Integer& x = a.coeffs_[static_cast<std::size_t>(i1) * (a.deg2_ + 1) + j1];
      if (x == 0) continue;
      for (unsigned i2 = 0; i1 + i2 <= f.deg1_; ++i2) {
        for (unsigned j2 = 0; j1 + j2 <= f.deg2_; ++j2) {
          const Integer& y = b.coeffs_[static_cast<std::size_t>(i2) * (b.deg2_ + 1) + j2];
          if (y != 0) f.coeffs_[static_cast<std::size_t>(i1 + i2) * (f.deg2_ + 1) + j1 + j2] += x * y;
        }
      }
    }
  }
  return f;
}

TruncatedBiSeries TruncatedBiSeries::pow(unsigned e) const {
  TruncatedBiSeries result = constant(deg1_, deg2_, 1);
  TruncatedBiSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

TruncatedBiSeries unit_inverse(const TruncatedBiSeries& f) {
  if (f.coefficient(0, 0) != 1) {
    throw Error(ErrorCategory::NonUnitConstantTerm,
                "constant term is " + f.coefficient(0, 0).str() + ", expected 1");
  }
  // g = 1 - sum_{(i,j) != 0} f_ij g_{a-i, b-j}, solved in graded order
  TruncatedBiSeries g(f.deg1(), f.deg2());
  for (unsigned a = 0; a <= f.deg1(); ++a) {
    for (unsigned b = 0; b <= f.deg2(); ++b) {
      Integer sum = (a == 0 && b == 0) ? 1 : 0;
      for (unsigned i = 0; i <= a; ++i) {
        for (unsigned j = 0; j <= b; ++j) {
          if (i == 0 && j == 0) continue;
          const Integer fij = f.coefficient(i, j);
          if (fij != 0) sum -= fij * g.coefficient(a - i, b - j);
        }
      }
      g.set(a, b, sum);
    }
  }
  return g;
}

namespace {

// 1 + a H1 + b H2
TruncatedBiSeries linear(unsigned d1, unsigned d2, long a, long b) {
  TruncatedBiSeries f = TruncatedBiSeries::constant(d1, d2, 1);
  f = f + TruncatedBiSeries::monomial(d1, d2, 1, 0, a) + TruncatedBiSeries::monomial(d1, d2, 0, 1, b);
  return f;
}

// a H1 + b H2
TruncatedBiSeries form(unsigned d1, unsigned d2, long a, long b) {
  return TruncatedBiSeries::monomial(d1, d2, 1, 0, a) + TruncatedBiSeries::monomial(d1, d2, 0, 1, b);
}

void require_sizes(unsigned s, unsigned t) {
  if (s < 1 || t < 1) throw Error(ErrorCategory::InvalidArgument, "matrix sizes must be at least 1");
}

// 4 H1 H2 / ((1+2H1)(1+2H2))
TruncatedBiSeries segre_factor(unsigned d1, unsigned d2) {
  return TruncatedBiSeries::monomial(d1, d2, 1, 1, 4) * unit_inverse(linear(d1, d2, 2, 0)) *
         unit_inverse(linear(d1, d2, 0, 2));
}

// 1 / ((1+2H1+2H2)(1+H1+H2))
TruncatedBiSeries section_factor(unsigned d1, unsigned d2) {
  return unit_inverse(linear(d1, d2, 2, 2)) * unit_inverse(linear(d1, d2, 1, 1));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer signed_by_dim(unsigned s, unsigned t, const Integer& value) {
  return (s + t) % 2 == 0 ? value : Integer(-value);
}

}  // namespace

TruncatedBiSeries chi_series(ChiKind which, unsigned s, unsigned t) {
  require_sizes(s, t);
  const unsigned d1 = s - 1;
  const unsigned d2 = t - 1;
  TruncatedBiSeries base = segre_factor(d1, d2) * linear(d1, d2, 1, 0).pow(s) * linear(d1, d2, 0, 1).pow(t);
  const TruncatedBiSeries quadric = form(d1, d2, 2, 2) * unit_inverse(linear(d1, d2, 2, 2));
  const TruncatedBiSeries hyperplane = form(d1, d2, 1, 1) * unit_inverse(linear(d1, d2, 1, 1));
  switch (which) {
    case ChiKind::Z: return base;
    case ChiKind::ZQ: return base * quadric;
    case ChiKind::ZH: return base * hyperplane;
    case ChiKind::ZQH: return base * quadric * hyperplane;
  }
  return base;
}

Integer chi_value(ChiKind which, unsigned s, unsigned t) { return chi_series(which, s, t).coefficient(s - 1, t - 1); }

Integer rank_one_series_coefficient(unsigned s, unsigned t) {
  require_sizes(s, t);
  const unsigned d1 = s - 1;
  const unsigned d2 = t - 1;
  const TruncatedBiSeries f =
      segre_factor(d1, d2) * linear(d1, d2, 1, 0).pow(s) * linear(d1, d2, 0, 1).pow(t) * section_factor(d1, d2);
  return f.coefficient(d1, d2);
}

Integer ded_rank_one(unsigned s, unsigned t) { return signed_by_dim(s, t, rank_one_series_coefficient(s, t)); }

Integer ded_rank_one_inclusion_exclusion(unsigned s, unsigned t) {
  const Integer value = chi_value(ChiKind::Z, s, t) - chi_value(ChiKind::ZQ, s, t) - chi_value(ChiKind::ZH, s, t) +
                        chi_value(ChiKind::ZQH, s, t);
  return signed_by_dim(s, t, value);
}

TruncatedBiSeries rank_one_c_series(unsigned cap) { return segre_factor(cap, cap) * section_factor(cap, cap); }

Integer ded_rank_one_binomial(unsigned s, unsigned t, unsigned cap) {
  require_sizes(s, t);
  if (s - 1 > cap || t - 1 > cap) {
    throw Error(ErrorCategory::CapExceeded, "sizes (" + std::to_string(s) + ", " + std::to_string(t) +
                                                ") need c coefficients beyond the cap " + std::to_string(cap));
  }
  static std::mutex mutex;
  static std::map<unsigned, TruncatedBiSeries> cache;
  const TruncatedBiSeries* cp = nullptr;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(cap);
    if (it == cache.end()) it = cache.emplace(cap, rank_one_c_series(cap)).first;
    cp = &it->second;
  }
  const TruncatedBiSeries& c = *cp;
  Integer total = 0;
  for (unsigned k = 0; k < s; ++k) {
    for (unsigned l = 0; l < t; ++l) {
      total += binomial(s, k) * binomial(t, l) * c.coefficient(s - 1 - k, t - 1 - l);
    }
  }
  return signed_by_dim(s, t, total);
}

}  // namespace eddefect
