#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eddefect/error.hpp"
#include "eddefect/poly/coefficients.hpp"
#include "eddefect/poly/monomial.hpp"
#include "eddefect/poly/ring.hpp"

namespace eddefect {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

template <class C>
struct Term {
  Monomial monomial;
  C coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted by descending
/// grevlex order with no zero coefficients, so equal polynomials have equal
/// term vectors and printing is canonical. Immutable after construction.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Traits = CoeffTraits<C>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) { check_domain(); }

  Polynomial(RingPtr ring, std::vector<Term<C>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    check_domain();
    for (const auto& t : terms_) {
      if (t.monomial.size() != ring_->size()) {
        throw Error(ErrorCategory::InvalidArgument, "exponent vector length does not match ring");
      }
    }
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, C value) {
    std::size_t n = ring->size();
    return Polynomial(std::move(ring), {{Monomial(n), std::move(value)}});
  }

  static Polynomial constant(RingPtr ring, long value) {
    C c = Traits::from_rational(mpq_class(value), *ring);
    return constant(std::move(ring), std::move(c));
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw Error(ErrorCategory::InvalidArgument, "variable index out of range");
    std::size_t n = ring->size();
    C one = Traits::one(*ring);
    return Polynomial(std::move(ring), {{Monomial::variable(n, index), std::move(one)}});
  }

  static Polynomial term(RingPtr ring, Monomial m, C value) {
    return Polynomial(std::move(ring), {{std::move(m), std::move(value)}});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term<C>> terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest term in grevlex. Requires a nonzero polynomial.
  const Term<C>& leading_term() const { return terms_.front(); }

  int total_degree() const {
    if (terms_.empty()) return kZeroPolynomialDegree;
    return static_cast<int>(terms_.front().monomial.degree());
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term<C>& t) { return t.monomial.degree() == d; });
  }

  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  C constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Traits::zero(*ring_);
  }

  /// Exponent of variable `var` in the highest power it appears with.
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  Polynomial differentiate(std::size_t var) const {
    if (var >= ring_->size()) throw Error(ErrorCategory::InvalidArgument, "variable index out of range");
    std::vector<Term<C>> out;
    for (const auto& t : terms_) {
      unsigned e = t.monomial[var];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m.set(var, e - 1);
      out.push_back({std::move(m), t.coeff * Traits::from_rational(mpq_class(e), *ring_)});
    }
    return Polynomial(ring_, std::move(out));
  }

  Polynomial scaled(const C& c) const {
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial, t.coeff * c});
    return Polynomial(ring_, std::move(out));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    std::vector<Term<C>> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return Polynomial(a.ring_, std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  /// Value at a complex point (length = number of variables), using
  /// per-variable power tables.
  Complex evaluate(std::span<const Complex> point) const {
    if (point.size() != ring_->size()) {
      throw Error(ErrorCategory::InvalidArgument, "evaluation point has wrong length");
    }
    std::vector<std::vector<Complex>> powers(point.size());
    for (std::size_t v = 0; v < point.size(); ++v) {
      unsigned d = degree_in(v);
      powers[v].resize(d + 1);
      powers[v][0] = 1.0;
      for (unsigned k = 1; k <= d; ++k) powers[v][k] = powers[v][k - 1] * point[v];
    }
    Complex sum = 0.0;
    for (const auto& t : terms_) {
      Complex prod = Traits::to_complex(t.coeff);
      for (std::size_t v = 0; v < point.size(); ++v) {
        if (t.monomial[v] != 0) prod *= powers[v][t.monomial[v]];
      }
      sum += prod;
    }
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      CoeffRepr r = Traits::repr(t.coeff);
      std::string mono = monomial_string(t.monomial);
      std::string body;
      if (mono.empty()) {
        body = r.magnitude;
      } else if (r.magnitude == "1") {
        body = mono;
      } else {
        body = r.magnitude + "*" + mono;
      }
      if (first) {
        out += (r.negative ? "-" : "") + body;
      } else {
        out += (r.negative ? " - " : " + ") + body;
      }
      first = false;
    }
    return out;
  }

 private:
  void check_domain() const {
    if (ring_->domain().kind != Traits::kind) {
      throw Error(ErrorCategory::RingMismatch, "coefficient type does not match ring domain " +
                                                   eddefect::to_string(ring_->domain()));
    }
  }

  static void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) {
      throw Error(ErrorCategory::RingMismatch, "polynomials belong to different rings");
    }
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same_ring(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      std::strong_ordering cmp = std::strong_ordering::equal;
      if (i == a.terms_.size()) {
        cmp = std::strong_ordering::less;
      } else if (j == b.terms_.size()) {
        cmp = std::strong_ordering::greater;
      } else {
        cmp = grevlex(a.terms_[i].monomial, b.terms_[j].monomial);
      }
      if (cmp == std::strong_ordering::greater) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? -t.coeff : t.coeff});
      } else {
        C c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!Traits::is_zero(c)) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<C>& x, const Term<C>& y) {
      return grevlex(x.monomial, y.monomial) == std::strong_ordering::greater;
    });
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term<C>& t) { return Traits::is_zero(t.coeff); });
    terms_ = std::move(out);
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->variables()[v];
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
  }

  RingPtr ring_;
  std::vector<Term<C>> terms_;
};

using QPoly = Polynomial<GaussianRational>;
using FpPoly = Polynomial<Fp>;
using CPoly = Polynomial<Complex>;

template <class C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned exponent) {
  Polynomial<C> acc = Polynomial<C>::constant(base.ring(), CoeffTraits<C>::one(*base.ring()));
  Polynomial<C> b = base;
  while (exponent > 0) {
    if (exponent & 1u) acc = acc * b;
    exponent >>= 1u;
    if (exponent > 0) b = b * b;
  }
  return acc;
}

/// f(images[0], ..., images[n-1]): every image lives in `target`.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images, const RingPtr& target) {
  if (images.size() != f.ring()->size()) {
    throw Error(ErrorCategory::InvalidArgument, "substitution needs one image per variable");
  }
  std::vector<std::vector<Polynomial<C>>> powers(images.size());
  Polynomial<C> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<C> prod = Polynomial<C>::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      unsigned e = t.monomial[v];
      if (e == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(Polynomial<C>::constant(target, CoeffTraits<C>::one(*target)));
      while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
      prod = prod * cache[e];
    }
    result += prod;
  }
  return result;
}

/// Composition with a linear map: old variable i becomes
/// sum_j matrix[i][j] * (new variable j).
template <class C>
Polynomial<C> substitute_linear(const Polynomial<C>& f, const std::vector<std::vector<C>>& matrix,
                                const RingPtr& target) {
  if (matrix.size() != f.ring()->size()) {
    throw Error(ErrorCategory::InvalidArgument, "linear substitution needs one row per old variable");
  }
  std::vector<Polynomial<C>> images;
  images.reserve(matrix.size());
  for (const auto& row : matrix) {
    if (row.size() != target->size()) {
      throw Error(ErrorCategory::InvalidArgument, "linear substitution row has wrong length");
    }
    Polynomial<C> img(target);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!CoeffTraits<C>::is_zero(row[j])) img += Polynomial<C>::variable(target, j).scaled(row[j]);
    }
    images.push_back(std::move(img));
  }
  return substitute(f, images, target);
}

/// Re-express `f` in a ring that contains all of its variables (matched by
/// name), e.g. after appending multiplier variables.
template <class C>
Polynomial<C> embed(const Polynomial<C>& f, const RingPtr& target) {
  std::vector<std::size_t> where(f.ring()->size());
  for (std::size_t v = 0; v < where.size(); ++v) {
    auto idx = target->index_of(f.ring()->variables()[v]);
    if (!idx) throw Error(ErrorCategory::RingMismatch, "variable " + f.ring()->variables()[v] + " missing");
    where[v] = *idx;
  }
  std::vector<Term<C>> out;
  out.reserve(f.num_terms());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t v = 0; v < where.size(); ++v) m.set(where[v], t.monomial[v]);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial<C>(target, std::move(out));
}

/// Coefficient-wise conversion into a ring with another domain.
template <class D, class C, class F>
Polynomial<D> map_coefficients(const Polynomial<C>& f, const RingPtr& target, F&& fn) {
  if (target->size() != f.ring()->size()) {
    throw Error(ErrorCategory::RingMismatch, "coefficient map needs the same variables");
  }
  std::vector<Term<D>> out;
  out.reserve(f.num_terms());
  for (const auto& t : f.terms()) out.push_back({t.monomial, fn(t.coeff)});
  return Polynomial<D>(target, std::move(out));
}

inline CPoly to_complex(const QPoly& f, const RingPtr& complex_ring) {
  return map_coefficients<Complex>(f, complex_ring, [](const GaussianRational& c) { return c.to_complex(); });
}

inline FpPoly to_prime_field(const QPoly& f, const RingPtr& fp_ring) {
  std::uint32_t p = fp_ring->domain().prime;
  return map_coefficients<Fp>(f, fp_ring, [p](const GaussianRational& c) { return to_prime_field(c, p); });
}

}  // namespace eddefect
