#include "eddefect/strata/poset.hpp"

#include <algorithm>
#include <set>

#include "eddefect/error.hpp"

namespace eddefect {

namespace {

[[noreturn]] void inconsistent(const std::string& message) { throw Error(ErrorCategory::PosetInconsistent, message); }

std::map<std::string, std::size_t> name_index(const StratumPoset& poset) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < poset.strata.size(); ++i) {
    if (!index.emplace(poset.strata[i].name, i).second) inconsistent("duplicate stratum " + poset.strata[i].name);
  }
  return index;
}

std::string describe(const StratumPair& p) { return "(" + p.first + ", " + p.second + ")"; }

// Matrix over the comparable pairs, unit diagonal, entry (W, V) from `values`
// transformed by `sign`; `what` names the data in error messages.
IntegerMatrix assemble(const std::vector<std::string>& names, const std::vector<StratumPair>& pairs,
                       const std::map<StratumPair, Integer>& values, int sign, const std::string& what) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < names.size(); ++i) pos[names[i]] = i;
  const std::set<StratumPair> comparable(pairs.begin(), pairs.end());
  for (const auto& [p, v] : values) {
    if (!comparable.contains(p)) inconsistent(what + " given for the incomparable pair " + describe(p));
  }
  IntegerMatrix m(names.size(), std::vector<Integer>(names.size(), 0));
  for (std::size_t i = 0; i < names.size(); ++i) m[i][i] = 1;
  for (const auto& p : pairs) {
    auto it = values.find(p);
    if (it == values.end()) inconsistent(what + " missing for " + describe(p));
    m[pos.at(p.first)][pos.at(p.second)] = sign * it->second;
  }
  return m;
}

}  // namespace

std::vector<std::size_t> linear_extension(const StratumPoset& poset) {
  std::vector<std::size_t> order(poset.strata.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = poset.strata[a];
    const auto& y = poset.strata[b];
    return std::tie(x.dim, x.name) < std::tie(y.dim, y.name);
  });
  return order;
}

std::vector<StratumPair> comparable_pairs(const StratumPoset& poset) {
  const auto index = name_index(poset);
  const std::size_t n = poset.strata.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (const auto& p : poset.order) {
    auto a = index.find(p.first);
    auto b = index.find(p.second);
    if (a == index.end() || b == index.end()) inconsistent("order relation " + describe(p) + " names an unknown stratum");
    if (a->second == b->second) inconsistent("order relation " + describe(p) + " is reflexive");
    less[a->second][b->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!less[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (less[k][j]) less[i][j] = true;
      }
    }
  }
  std::vector<StratumPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (less[i][i]) inconsistent("order contains a cycle through " + poset.strata[i].name);
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      if (poset.strata[i].dim >= poset.strata[j].dim) {
        inconsistent("stratum " + poset.strata[i].name + " lies below " + poset.strata[j].name +
                     " but its dimension is not smaller");
      }
      out.emplace_back(poset.strata[i].name, poset.strata[j].name);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntegerMatrix unitriangular_inverse(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  IntegerMatrix inv(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n || m[i][i] != 1) throw Error(ErrorCategory::InvalidArgument, "matrix is not unit triangular");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != 0) throw Error(ErrorCategory::InvalidArgument, "matrix is not upper triangular");
    }
  }
  // back substitution column by column: inv[i][j] = -sum_{i<k<=j} m[i][k] inv[k][j]
  for (std::size_t j = 0; j < n; ++j) {
    inv[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      Integer sum = 0;
      for (std::size_t k = i + 1; k <= j; ++k) sum += m[i][k] * inv[k][j];
      inv[i][j] = -sum;
    }
  }
  return inv;
}

TransitionMatrices b_from_links(const StratumPoset& poset) {
  const auto pairs = comparable_pairs(poset);
  TransitionMatrices t;
  for (std::size_t i : linear_extension(poset)) t.names.push_back(poset.strata[i].name);

  const bool have_links = !poset.links.empty() || !poset.euler_obstructions;
  if (have_links) {
    t.B = assemble(t.names, pairs, poset.links, -1, "complex link");
    t.A = unitriangular_inverse(t.B);
  }
  if (poset.euler_obstructions) {
    IntegerMatrix a = assemble(t.names, pairs, *poset.euler_obstructions, 1, "Euler obstruction");
    if (!have_links) {
      t.A = std::move(a);
      t.B = unitriangular_inverse(t.A);
    } else if (a != t.A) {
      for (std::size_t i = 0; i < t.names.size(); ++i) {
        for (std::size_t j = 0; j < t.names.size(); ++j) {
          if (a[i][j] != t.A[i][j]) {
            inconsistent("Euler obstruction of " + t.names[j] + " at " + t.names[i] + " is " + a[i][j].str() +
                         " but the complex links give " + t.A[i][j].str());
          }
        }
      }
    }
  }
  return t;
}

std::map<std::string, Integer> alpha_coefficients(const StratumPoset& poset) {
  const auto t = b_from_links(poset);
  const auto order = linear_extension(poset);
  std::map<std::string, Integer> alpha;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Integer sum = 0;
    for (std::size_t j = i; j < order.size(); ++j) sum += t.B[i][j] * poset.strata[order[j]].mu;
    alpha[t.names[i]] = sum;
  }
  return alpha;
}

std::map<std::string, Integer> evaluate_at_strata(const StratumPoset& poset,
                                                  const std::map<std::string, Integer>& alpha) {
  const auto t = b_from_links(poset);
  std::map<std::string, Integer> values;
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    Integer sum = 0;
    for (std::size_t j = i; j < t.names.size(); ++j) {
      auto it = alpha.find(t.names[j]);
      if (it == alpha.end()) throw Error(ErrorCategory::InvalidArgument, "no alpha for stratum " + t.names[j]);
      sum += t.A[i][j] * it->second;
    }
    values[t.names[i]] = sum;
  }
  return values;
}

Integer ded_sliced(const StratumPoset& poset, const std::map<std::string, Integer>& ged_sliced_closures) {
  const auto alpha = alpha_coefficients(poset);
  Integer total = 0;
  for (const auto& s : poset.strata) {
    auto it = ged_sliced_closures.find(s.name);
    if (it == ged_sliced_closures.end()) {
      throw Error(ErrorCategory::InvalidArgument, "no sliced GED value for stratum " + s.name);
    }
    const long codim = poset.ambient_hypersurface_dim - s.dim;
    const Integer term = alpha.at(s.name) * it->second;
    total += (codim % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

Integer ded_from_strata(const StratumPoset& poset) {
  std::map<std::string, Integer> ged;
  for (const auto& s : poset.strata) ged[s.name] = s.ged_closure;
  return ded_sliced(poset, ged);
}

Integer ded_isolated(const std::vector<Integer>& mus) {
  Integer total = 0;
  for (const auto& m : mus) total += m;
  return total;
}

Integer ded_equisingular(const Integer& mu, const Integer& ged_z) { return mu * ged_z; }

Integer mu_from_transversal(const Integer& mu_transversal, long ambient_hypersurface_dim, long stratum_dim) {
  if (stratum_dim > ambient_hypersurface_dim) {
    throw Error(ErrorCategory::InvalidArgument, "stratum dimension exceeds the ambient dimension");
  }
  return (ambient_hypersurface_dim - stratum_dim) % 2 == 0 ? mu_transversal : Integer(-mu_transversal);
}

}  // namespace eddefect
