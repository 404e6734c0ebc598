#pragma once

#include <filesystem>
#include <string>

#include "eddefect/strata/poset.hpp"

namespace eddefect {

/// JSON strata description:
///
///   {
///     "ambient_hypersurface_dim": 1,
///     "strata": [
///       {"name": "S0", "dim": 1, "ged_closure": 1, "mu": 1},
///       {"name": "P1", "dim": 0, "ged_closure": 1, "mu_transversal": 1}
///     ],
///     "order": [["P1", "S0"]],
///     "links": [{"lower": "P1", "upper": "S0", "chi_c": 1}],
///     "euler_obstructions": [{"lower": "P1", "upper": "S0", "value": 1}]
///   }
///
/// Each stratum gives exactly one of "mu" and "mu_transversal". "links" and
/// "euler_obstructions" are each optional but one must be present.
StratumPoset parse_strata(const std::string& text);

StratumPoset read_strata_file(const std::filesystem::path& path);

}  // namespace eddefect
