#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eddefect/util/integer.hpp"

namespace eddefect {

struct Stratum {
  std::string name;
  long dim = 0;
  Integer ged_closure = 0;  // GED of the closure
  Integer mu = 0;           // reduced Euler characteristic of the Milnor fiber
};

using StratumPair = std::pair<std::string, std::string>;  // (lower, upper)

/// Strata of X cap Q with the frontier order. `links` holds chi_c of the
/// complex link for each comparable pair; `euler_obstructions` optionally
/// holds Eu of the closure of `upper` at points of `lower`. At least one
/// of the two must be given, and when both are they must agree.
struct StratumPoset {
  std::vector<Stratum> strata;
  std::vector<StratumPair> order;
  std::map<StratumPair, Integer> links;
  std::optional<std::map<StratumPair, Integer>> euler_obstructions;
  long ambient_hypersurface_dim = 0;
};

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Rows and columns follow `names`, a linear extension sorted by
/// (dim, name). A holds Euler obstructions, B = A^-1 the indicator
/// coefficients.
struct TransitionMatrices {
  std::vector<std::string> names;
  IntegerMatrix A;
  IntegerMatrix B;
};

/// Strata indices sorted by (dim, name).
std::vector<std::size_t> linear_extension(const StratumPoset& poset);

/// Transitive closure of the order as (lower, upper) pairs. Throws
/// PosetInconsistent for unknown or duplicate names, cycles, reflexive
/// pairs or a lower stratum whose dimension is not smaller.
std::vector<StratumPair> comparable_pairs(const StratumPoset& poset);

/// Inverse of a unit upper-triangular integer matrix.
IntegerMatrix unitriangular_inverse(const IntegerMatrix& m);

/// b_{W,V} = -chi_c(L_{W,V}) off the diagonal, unit diagonal; A = B^-1.
/// Uses the Euler obstructions when no links are given, and cross-checks
/// when both are present.
TransitionMatrices b_from_links(const StratumPoset& poset);

/// alpha_W = sum over V >= W of b_{W,V} mu_V.
std::map<std::string, Integer> alpha_coefficients(const StratumPoset& poset);

/// Value of sum_V alpha_V Eu_{closure V} at a point of each stratum; equals
/// mu when alpha comes from alpha_coefficients.
std::map<std::string, Integer> evaluate_at_strata(const StratumPoset& poset,
                                                  const std::map<std::string, Integer>& alpha);

/// sum_V (-1)^(ambient dim - dim V) alpha_V GED(closure V).
Integer ded_from_strata(const StratumPoset& poset);

/// Same alpha as ded_from_strata, with GED(closure V cap L) supplied per
/// stratum. Throws InvalidArgument when a stratum is missing from the map.
Integer ded_sliced(const StratumPoset& poset, const std::map<std::string, Integer>& ged_sliced_closures);

Integer ded_isolated(const std::vector<Integer>& mus);

Integer ded_equisingular(const Integer& mu, const Integer& ged_z);

/// mu of a stratum whose transversal Milnor fiber has reduced Euler
/// characteristic `mu_transversal`: the fiber is a bouquet of spheres of
/// dimension ambient - stratum.
Integer mu_from_transversal(const Integer& mu_transversal, long ambient_hypersurface_dim, long stratum_dim);

}  // namespace eddefect
