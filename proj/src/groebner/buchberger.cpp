#include "eddefect/groebner/buchberger.hpp"

#include <algorithm>

#include "sparse.hpp"

namespace eddefect {

namespace {

using detail::Terms;

std::strong_ordering order(const Monomial& a, const Monomial& b) { return grevlex(a, b); }

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t id;
};

/// Full reduction of `f` by the monic polynomials polys[k], k in `active`.
Terms<Fp> reduce(Terms<Fp> h, const std::vector<Terms<Fp>>& polys, const std::vector<std::size_t>& active) {
  Terms<Fp> rem;
  std::size_t start = 0;
  while (start < h.size()) {
    const Monomial& lead = h[start].monomial;
    const Terms<Fp>* divisor = nullptr;
    for (std::size_t k : active) {
      if (polys[k].front().monomial.divides(lead)) {
        divisor = &polys[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(h[start++]);
      continue;
    }
    Monomial shift = lead / divisor->front().monomial;
    Fp c = h[start].coeff;
    h = detail::sub_scaled_shifted<Fp>(std::span<const Term<Fp>>(h).subspan(start), c, shift, *divisor, order);
    start = 0;
  }
  return rem;
}

class Buchberger {
 public:
  explicit Buchberger(const BuchbergerOptions& options) : options_(options) {}

  std::vector<Terms<Fp>> run(const std::vector<FpPoly>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      insert(detail::make_monic(Terms<Fp>(g.terms().begin(), g.terms().end())));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > options_.max_pairs) {
        throw Error(ErrorCategory::CapExceeded, "Groebner basis pair cap of " + std::to_string(options_.max_pairs) +
                                                    " exceeded");
      }
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return a.id < b.id;
      });
      Pair p = std::move(*best);
      pairs_.erase(best);
      auto h = reduce(s_polynomial(p), polys_, active_);
      if (!h.empty()) insert(detail::make_monic(std::move(h)));
    }
    return interreduce();
  }

 private:
  Terms<Fp> s_polynomial(const Pair& p) const {
    const auto& f = polys_[p.i];
    const auto& g = polys_[p.j];
    Monomial mf = p.lcm / f.front().monomial;
    Monomial mg = p.lcm / g.front().monomial;
    Terms<Fp> shifted_f;
    shifted_f.reserve(f.size());
    for (const auto& t : f) shifted_f.push_back({t.monomial * mf, t.coeff});
    return detail::sub_scaled_shifted<Fp>(shifted_f, f.front().coeff, mg, g, order);
  }

  // Gebauer-Moeller update with the new polynomial h.
  void insert(Terms<Fp> poly) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(poly));
    const Monomial& lh = polys_[h].front().monomial;

    std::vector<std::pair<std::size_t, Monomial>> candidates;
    for (std::size_t g : active_) candidates.emplace_back(g, lcm(polys_[g].front().monomial, lh));

    std::vector<std::pair<std::size_t, Monomial>> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& [g, l] = candidates[a];
      bool keep = polys_[g].front().monomial.coprime(lh);
      if (!keep) {
        auto divides_l = [&l](const std::pair<std::size_t, Monomial>& other) { return other.second.divides(l); };
        keep = std::none_of(candidates.begin() + static_cast<std::ptrdiff_t>(a) + 1, candidates.end(), divides_l) &&
               std::none_of(kept.begin(), kept.end(), divides_l);
      }
      if (keep) kept.push_back(candidates[a]);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && !(lcm(polys_[p.i].front().monomial, lh) == p.lcm) &&
             !(lcm(polys_[p.j].front().monomial, lh) == p.lcm);
    });
    for (auto& [g, l] : kept) {
      if (polys_[g].front().monomial.coprime(lh)) continue;
      pairs_.push_back({g, h, std::move(l), next_id_++});
    }

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].front().monomial); });
    active_.push_back(h);
  }

  std::vector<Terms<Fp>> interreduce() const {
    std::vector<Terms<Fp>> out;
    for (std::size_t g : active_) {
      std::vector<std::size_t> others;
      for (std::size_t k : active_) {
        if (k != g) others.push_back(k);
      }
      Terms<Fp> tail(polys_[g].begin() + 1, polys_[g].end());
      Terms<Fp> r{polys_[g].front()};
      for (auto& t : reduce(std::move(tail), polys_, others)) r.push_back(std::move(t));
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const Terms<Fp>& a, const Terms<Fp>& b) {
      return grevlex(a.front().monomial, b.front().monomial) == std::strong_ordering::greater;
    });
    return out;
  }

  BuchbergerOptions options_;
  std::vector<Terms<Fp>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::size_t next_id_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<FpPoly>& gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw Error(ErrorCategory::InvalidArgument, "Groebner basis of an empty generator list");
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw Error(ErrorCategory::RingMismatch, "generators belong to different rings");
  }
  GroebnerBasis gb;
  gb.order = MonomialOrderKind::GrRevLex;
  gb.reduced = true;
  for (auto& t : Buchberger(options).run(gens)) gb.generators.emplace_back(ring, std::move(t));
  return gb;
}

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis) {
  std::vector<Terms<Fp>> polys;
  std::vector<std::size_t> active;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    active.push_back(polys.size());
    polys.push_back(detail::make_monic(Terms<Fp>(g.terms().begin(), g.terms().end())));
  }
  return FpPoly(f.ring(), reduce(Terms<Fp>(f.terms().begin(), f.terms().end()), polys, active));
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                                        std::size_t max_count) {
  for (const auto& m : leading) {
    if (m.size() != num_vars) throw Error(ErrorCategory::InvalidArgument, "monomial has wrong number of variables");
    if (m.is_one()) return std::vector<Monomial>{};
  }
  for (std::size_t v = 0; v < num_vars; ++v) {
    bool bounded = std::any_of(leading.begin(), leading.end(),
                               [v](const Monomial& m) { return m[v] > 0 && m[v] == m.degree(); });
    if (!bounded) return std::nullopt;
  }
  std::vector<Monomial> out;
  Monomial current(num_vars);
  auto standard = [&](const Monomial& m) {
    return std::none_of(leading.begin(), leading.end(), [&m](const Monomial& l) { return l.divides(m); });
  };
  // Divisibility is monotone, so once x_v^e is excluded every larger
  // exponent (with the same prefix) is too.
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (v == num_vars) {
      if (out.size() >= max_count) {
        throw Error(ErrorCategory::CapExceeded, "staircase larger than " + std::to_string(max_count));
      }
      out.push_back(current);
      return;
    }
    for (unsigned e = 0;; ++e) {
      current.set(v, e);
      if (!standard(current)) break;
      self(self, v + 1);
    }
    current.set(v, 0);
  };
  dfs(dfs, 0);
  return out;
}

std::optional<std::uint64_t> staircase_count(const std::vector<Monomial>& leading, std::size_t num_vars) {
  auto mons = standard_monomials(leading, num_vars);
  if (!mons) return std::nullopt;
  return mons->size();
}

std::optional<std::uint64_t> staircase_count(const GroebnerBasis& gb) {
  if (gb.generators.empty()) return std::nullopt;
  std::vector<Monomial> leading;
  for (const auto& g : gb.generators) leading.push_back(g.leading_term().monomial);
  return staircase_count(leading, gb.generators.front().ring()->size());
}

}  // namespace eddefect
