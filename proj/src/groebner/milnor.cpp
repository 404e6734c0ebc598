#include "eddefect/groebner/milnor.hpp"

#include <algorithm>
#include <deque>

#include "eddefect/critical/critical_system.hpp"
#include "eddefect/groebner/buchberger.hpp"
#include "sparse.hpp"

namespace eddefect {

namespace {

using detail::Terms;
using Q = GaussianRational;

std::strong_ordering local_order(const Monomial& a, const Monomial& b) { return local_antigraded_lex(a, b); }

unsigned ecart(const Terms<Q>& f) {
  unsigned top = 0;
  for (const auto& t : f) top = std::max(top, t.monomial.degree());
  return top - f.front().monomial.degree();
}

/// Mora's weak normal form: reducers of smaller ecart are preferred and
/// intermediate results with larger ecart become reducers themselves, which
/// guarantees termination for local orders.
Terms<Q> nf_mora(Terms<Q> h, const std::vector<Terms<Q>>& basis) {
  std::deque<Terms<Q>> extra;
  std::vector<const Terms<Q>*> reducers;
  for (const auto& b : basis) reducers.push_back(&b);
  while (!h.empty()) {
    const Terms<Q>* best = nullptr;
    unsigned best_ecart = 0;
    for (const auto* t : reducers) {
      if (!t->front().monomial.divides(h.front().monomial)) continue;
      unsigned e = ecart(*t);
      if (best == nullptr || e < best_ecart) {
        best = t;
        best_ecart = e;
      }
    }
    if (best == nullptr) break;
    if (best_ecart > ecart(h)) {
      extra.push_back(h);
      reducers.push_back(&extra.back());
    }
    Q c = h.front().coeff / best->front().coeff;
    Monomial shift = h.front().monomial / best->front().monomial;
    h = detail::sub_scaled_shifted<Q>(h, c, shift, *best, local_order);
  }
  return h;
}

Terms<Q> s_polynomial(const Terms<Q>& f, const Terms<Q>& g) {
  Monomial l = lcm(f.front().monomial, g.front().monomial);
  Monomial mf = l / f.front().monomial;
  Terms<Q> shifted;
  shifted.reserve(f.size());
  for (const auto& t : f) shifted.push_back({t.monomial * mf, t.coeff});
  return detail::sub_scaled_shifted<Q>(shifted, f.front().coeff / g.front().coeff, l / g.front().monomial, g,
                                       local_order);
}

}  // namespace

std::vector<QPoly> local_standard_basis(const std::vector<QPoly>& gens, std::size_t max_pairs) {
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  std::vector<Terms<Q>> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(detail::make_monic(detail::sorted_terms(g, local_order)));
  }
  struct Pair {
    std::size_t i, j;
    unsigned degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.push_back({i, j, lcm(basis[i].front().monomial, basis[j].front().monomial).degree()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs) {
      throw Error(ErrorCategory::CapExceeded, "standard basis pair cap of " + std::to_string(max_pairs) + " exceeded");
    }
    // lowest lcm degree first; the earliest such pair on ties
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    Pair p = *best;
    pairs.erase(best);
    auto h = nf_mora(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (h.empty()) continue;
    basis.push_back(detail::make_monic(std::move(h)));
    add_pairs(basis.size() - 1);
  }

  std::vector<QPoly> out;
  for (auto& b : basis) out.emplace_back(ring, std::move(b));
  return out;
}

MilnorResult local_algebra_dimension(const std::vector<QPoly>& ideal, unsigned cap) {
  if (ideal.empty()) throw Error(ErrorCategory::NonIsolatedOrCapExceeded, "empty ideal has infinite colength");
  const std::size_t n = ideal.front().ring()->size();
  std::vector<QPoly> basis;
  try {
    basis = local_standard_basis(ideal);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::CapExceeded) throw;
    throw Error(ErrorCategory::NonIsolatedOrCapExceeded, e.what());
  }
  std::vector<Monomial> leading;
  for (const auto& b : basis) {
    // the largest monomial in the local order is the lowest-degree one
    leading.push_back(detail::sorted_terms(b, local_order).front().monomial);
  }
  std::optional<std::vector<Monomial>> mons;
  try {
    mons = standard_monomials(leading, n, 1'000'000);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::CapExceeded) throw;
  }
  if (!mons) {
    throw Error(ErrorCategory::NonIsolatedOrCapExceeded, "local algebra is infinite-dimensional (non-isolated point)");
  }
  for (const auto& m : *mons) {
    if (m.degree() > cap) {
      throw Error(ErrorCategory::NonIsolatedOrCapExceeded,
                  "local algebra needs monomials of degree above the cap " + std::to_string(cap));
    }
  }
  std::sort(mons->begin(), mons->end(), [](const Monomial& a, const Monomial& b) {
    return local_antigraded_lex(a, b) == std::strong_ordering::greater;
  });
  return {mons->size(), std::move(*mons)};
}

MilnorResult milnor_number(const QPoly& g, unsigned cap) {
  const std::size_t n = g.ring()->size();
  if (g.ring()->domain().kind != DomainKind::Rational) {
    throw Error(ErrorCategory::InvalidArgument, "Milnor numbers need exact coefficients");
  }
  if (!g.constant_term().is_zero()) throw Error(ErrorCategory::NotSingular, "polynomial does not vanish at the origin");
  std::vector<QPoly> jacobian;
  for (std::size_t i = 0; i < n; ++i) {
    jacobian.push_back(g.differentiate(i));
    if (!jacobian.back().constant_term().is_zero()) {
      throw Error(ErrorCategory::NotSingular, "the origin is a smooth point (nonzero gradient)");
    }
  }
  if (n == 0 || std::all_of(jacobian.begin(), jacobian.end(), [](const QPoly& p) { return p.is_zero(); })) {
    throw Error(ErrorCategory::NonIsolatedOrCapExceeded, "polynomial is identically zero; singular locus is everything");
  }
  return local_algebra_dimension(jacobian, cap);
}

std::vector<GaussianRational> rationalize_point(std::span<const Complex> point, long max_denominator, double tol) {
  if (point.empty()) throw Error(ErrorCategory::InvalidArgument, "empty point");
  std::size_t a = 0;
  for (std::size_t i = 1; i < point.size(); ++i) {
    if (std::abs(point[i]) > std::abs(point[a])) a = i;
  }
  if (std::abs(point[a]) == 0.0) throw Error(ErrorCategory::InvalidArgument, "zero vector is not a projective point");
  std::vector<GaussianRational> out;
  for (std::size_t i = 0; i < point.size(); ++i) {
    Complex z = i == a ? Complex(1.0) : point[i] / point[a];
    mpq_class re = rationalize(z.real(), max_denominator);
    mpq_class im = rationalize(z.imag(), max_denominator);
    if (std::abs(re.get_d() - z.real()) > tol || std::abs(im.get_d() - z.imag()) > tol) {
      throw Error(ErrorCategory::NotExact, "point coordinate has no small exact representative");
    }
    out.emplace_back(re, im);
  }
  return out;
}

namespace {

/// Ring without variable b, and images of the old variables in it with
/// x_b -> replacement.
std::vector<QPoly> drop_images(const RingPtr& ring, const RingPtr& smaller, std::size_t b, const QPoly& replacement) {
  std::vector<QPoly> images;
  for (std::size_t i = 0, k = 0; i < ring->size(); ++i) {
    images.push_back(i == b ? replacement : QPoly::variable(smaller, k++));
  }
  return images;
}

RingPtr without_variable(const RingPtr& ring, std::size_t b) {
  auto names = ring->variables();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(b));
  return make_ring(std::move(names), ring->domain());
}

/// Index of a variable in which g is c * x_b + (terms free of x_b).
std::optional<std::size_t> linear_variable(const QPoly& g) {
  for (std::size_t b = 0; b < g.ring()->size(); ++b) {
    if (g.degree_in(b) != 1) continue;
    bool ok = std::all_of(g.terms().begin(), g.terms().end(),
                          [b](const Term<Q>& t) { return t.monomial[b] == 0 || t.monomial.degree() == 1; });
    if (ok) return b;
  }
  return std::nullopt;
}

MilnorResult graph_route(std::vector<QPoly> gens, QPoly q, unsigned cap) {
  for (;;) {
    std::erase_if(gens, [](const QPoly& g) { return g.is_zero(); });
    if (gens.empty()) break;
    std::optional<std::size_t> b;
    std::size_t which = 0;
    for (; which < gens.size(); ++which) {
      if ((b = linear_variable(gens[which]))) break;
    }
    if (!b) {
      throw Error(ErrorCategory::InvalidArgument,
                  "generators are not linear in any variable at this point; use the le-greuel route");
    }
    const RingPtr ring = q.ring();
    const RingPtr smaller = without_variable(ring, *b);
    const QPoly& g = gens[which];
    Q c;
    for (const auto& t : g.terms()) {
      if (t.monomial[*b] == 1) c = t.coeff;
    }
    QPoly rest = g - QPoly::variable(ring, *b).scaled(c);
    QPoly rest_small = substitute(rest, drop_images(ring, smaller, *b, QPoly(smaller)), smaller);
    auto images = drop_images(ring, smaller, *b, rest_small.scaled(-(Q(1) / c)));
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(which));
    for (auto& other : gens) other = substitute(other, images, smaller);
    q = substitute(q, images, smaller);
  }
  return milnor_number(q, cap);
}

MilnorResult le_greuel_route(const std::vector<QPoly>& gens, const QPoly& q, unsigned cap) {
  std::vector<QPoly> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.size() != 1) {
    throw Error(ErrorCategory::InvalidArgument, "the le-greuel route needs a hypersurface given by one generator");
  }
  const QPoly& f = nonzero.front();
  if (!q.constant_term().is_zero()) throw Error(ErrorCategory::NotSingular, "point does not lie on the quadric");
  std::vector<std::vector<QPoly>> matrix(2);
  for (std::size_t i = 0; i < f.ring()->size(); ++i) {
    matrix[0].push_back(f.differentiate(i));
    matrix[1].push_back(q.differentiate(i));
  }
  std::vector<QPoly> ideal{f};
  for (auto& m : maximal_minors(matrix)) {
    if (!m.is_zero()) ideal.push_back(std::move(m));
  }
  auto result = local_algebra_dimension(ideal, cap);
  if (result.mu == 0) throw Error(ErrorCategory::NotSingular, "X meets the quadric transversally at the point");
  return result;
}

}  // namespace

MilnorResult milnor_at_point(const VarietyPresentation& v, const std::vector<GaussianRational>& point,
                             MilnorRoute route, unsigned cap) {
  if (v.kind != VarietyKind::Projective) {
    throw Error(ErrorCategory::InvalidArgument, "Milnor numbers of X meet Q need a projective variety");
  }
  if (point.size() != v.num_vars()) throw Error(ErrorCategory::InvalidArgument, "point has wrong length");
  auto gens = require_exact(v);

  std::size_t a = 0;
  for (std::size_t i = 1; i < point.size(); ++i) {
    if (point[i].norm() > point[a].norm()) a = i;
  }
  if (point[a].is_zero()) throw Error(ErrorCategory::InvalidArgument, "zero vector is not a projective point");

  // chart x_a = 1, point moved to the origin
  const RingPtr local = without_variable(v.exact_ring, a);
  std::vector<QPoly> images;
  for (std::size_t i = 0, k = 0; i < point.size(); ++i) {
    if (i == a) {
      images.push_back(QPoly::constant(local, 1));
    } else {
      images.push_back(QPoly::variable(local, k++) + QPoly::constant(local, point[i] / point[a]));
    }
  }
  std::vector<QPoly> local_gens;
  for (const auto& g : gens) {
    local_gens.push_back(substitute(g, images, local));
    if (!local_gens.back().constant_term().is_zero()) {
      throw Error(ErrorCategory::NotSingular, "point does not lie on X");
    }
  }
  QPoly q = substitute(weighted_quadric(v.exact_ring, std::vector<Q>(v.num_vars(), Q(1))), images, local);
  return route == MilnorRoute::Graph ? graph_route(std::move(local_gens), std::move(q), cap)
                                     : le_greuel_route(local_gens, q, cap);
}

}  // namespace eddefect
