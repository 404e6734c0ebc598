#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "eddefect/critical/variety.hpp"

namespace eddefect {

/// System file format, one directive per line, `#` starts a comment:
///
///   vars: x0 x1 x2 x3
///   codim: 1
///   kind: projective        (default: affine)
///   gen: x0*x3 - x1*x2      (one per generator)
///
/// Variables may be separated by spaces or commas.
VarietyPresentation parse_system(std::string_view text);
VarietyPresentation read_system_file(const std::filesystem::path& path);

std::string format_system(const VarietyPresentation& v);
void write_system_file(const VarietyPresentation& v, const std::filesystem::path& path);

}  // namespace eddefect
