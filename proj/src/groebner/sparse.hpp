#pragma once

// Term-vector kernels shared by the global and local basis algorithms.
// Term vectors are sorted descending in the order given by `Cmp` (a
// function returning std::strong_ordering); both orders used here are
// multiplicative, so shifting by a monomial keeps a vector sorted.

#include <algorithm>
#include <compare>
#include <span>
#include <vector>

#include "eddefect/poly/polynomial.hpp"

namespace eddefect::detail {

template <class C>
using Terms = std::vector<Term<C>>;

/// f - c * m * g
template <class C, class Cmp>
Terms<C> sub_scaled_shifted(std::span<const Term<C>> f, const C& c, const Monomial& m, const Terms<C>& g, Cmp cmp) {
  Terms<C> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial shifted = g[j].monomial * m;
    auto ord = i == f.size() ? std::strong_ordering::less : cmp(f[i].monomial, shifted);
    if (ord == std::strong_ordering::greater) {
      out.push_back(f[i++]);
    } else if (ord == std::strong_ordering::less) {
      out.push_back({std::move(shifted), -(c * g[j].coeff)});
      ++j;
    } else {
      C v = f[i].coeff - c * g[j].coeff;
      if (!CoeffTraits<C>::is_zero(v)) out.push_back({std::move(shifted), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline Fp inverse_of(const Fp& c) { return c.inverse(); }
inline GaussianRational inverse_of(const GaussianRational& c) { return GaussianRational(1) / c; }

template <class C>
Terms<C> make_monic(Terms<C> f) {
  if (f.empty()) return f;
  C inv = inverse_of(f.front().coeff);
  for (auto& t : f) t.coeff = t.coeff * inv;
  return f;
}

template <class C, class Cmp>
Terms<C> sorted_terms(const Polynomial<C>& p, Cmp cmp) {
  Terms<C> t(p.terms().begin(), p.terms().end());
  std::sort(t.begin(), t.end(), [&](const Term<C>& a, const Term<C>& b) {
    return cmp(a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  return t;
}

}  // namespace eddefect::detail
