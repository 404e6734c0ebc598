#pragma once

#include <vector>

#include "eddefect/util/integer.hpp"

namespace eddefect {

/// Integer power series in two variables H1, H2, truncated at H1^deg1 and
/// H2^deg2. Binary operations truncate to the smaller degrees of the two
/// operands.
class TruncatedBiSeries {
 public:
  TruncatedBiSeries(unsigned deg1, unsigned deg2);

  static TruncatedBiSeries constant(unsigned deg1, unsigned deg2, const Integer& c);
  /// c H1^i H2^j (zero if beyond the truncation).
  static TruncatedBiSeries monomial(unsigned deg1, unsigned deg2, unsigned i, unsigned j, const Integer& c);

  unsigned deg1() const { return deg1_; }
  unsigned deg2() const { return deg2_; }

  /// Zero beyond the truncation.
  Integer coefficient(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, const Integer& c);

  TruncatedBiSeries truncated(unsigned deg1, unsigned deg2) const;

  friend TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend TruncatedBiSeries operator-(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b);
  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) = default;

  TruncatedBiSeries pow(unsigned e) const;

 private:
  unsigned deg1_;
  unsigned deg2_;
  std::vector<Integer> coeffs_;  // row-major in i
};

/// Inverse of a series with constant term 1. Throws NonUnitConstantTerm
/// otherwise.
TruncatedBiSeries unit_inverse(const TruncatedBiSeries& f);

/// Generating series for the Euler characteristics of Z, Z cap Q_w, Z cap H
/// and Z cap Q_w cap H, where Z is the intersection of the rank-one matrices
/// of size s x t with the isotropic quadric, pulled back to the product of
/// projective spaces.
enum class ChiKind { Z, ZQ, ZH, ZQH };

/// The series truncated at (s - 1, t - 1).
TruncatedBiSeries chi_series(ChiKind which, unsigned s, unsigned t);

/// Coefficient of H1^(s-1) H2^(t-1) of chi_series.
Integer chi_value(ChiKind which, unsigned s, unsigned t);

/// Coefficient of H1^(s-1) H2^(t-1) in
/// 4 H1 H2 (1+H1)^s (1+H2)^t / ((1+2H1)(1+2H2)(1+2H1+2H2)(1+H1+H2)).
Integer rank_one_series_coefficient(unsigned s, unsigned t);

/// DED of the variety of s x t rank-one matrices: the coefficient above
/// times (-1)^dim Z with dim Z = s + t - 4.
Integer ded_rank_one(unsigned s, unsigned t);

/// (-1)^dim Z (chi(Z) - chi(Z cap Q_w) - chi(Z cap H) + chi(Z cap Q_w cap H)).
Integer ded_rank_one_inclusion_exclusion(unsigned s, unsigned t);

/// The s,t-independent factor
/// 4 H1 H2 / ((1+2H1)(1+2H2)(1+2H1+2H2)(1+H1+H2)) truncated at (cap, cap).
TruncatedBiSeries rank_one_c_series(unsigned cap);

constexpr unsigned kDefaultSegreCap = 32;

/// sum_{k<s, l<t} binom(s,k) binom(t,l) c_{s-1-k, t-1-l}, signed as in
/// ded_rank_one. Throws CapExceeded when s - 1 or t - 1 exceeds `cap`.
Integer ded_rank_one_binomial(unsigned s, unsigned t, unsigned cap = kDefaultSegreCap);

}  // namespace eddefect
