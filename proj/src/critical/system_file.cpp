#include "eddefect/critical/system_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "eddefect/error.hpp"
#include "eddefect/poly/parser.hpp"

namespace eddefect {

namespace {

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw Error(ErrorCategory::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

VarietyPresentation parse_system(std::string_view text) {
  std::optional<std::vector<std::string>> vars;
  std::optional<std::size_t> codim;
  VarietyKind kind = VarietyKind::Affine;
  std::vector<std::string> gens;
  std::vector<std::size_t> gen_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) syntax(line_no, "expected 'key: value'");
    std::string key = boost::algorithm::trim_copy(line.substr(0, colon));
    std::string value = boost::algorithm::trim_copy(line.substr(colon + 1));
    if (key == "vars") {
      if (vars) syntax(line_no, "duplicate 'vars'");
      std::vector<std::string> names;
      boost::algorithm::split(names, value, boost::algorithm::is_any_of(" \t,"), boost::algorithm::token_compress_on);
      std::erase_if(names, [](const std::string& s) { return s.empty(); });
      if (names.empty()) syntax(line_no, "no variables listed");
      vars = std::move(names);
    } else if (key == "codim") {
      if (codim) syntax(line_no, "duplicate 'codim'");
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
        syntax(line_no, "codim must be a non-negative integer");
      }
      codim = std::stoul(value);
    } else if (key == "kind") {
      if (value == "affine") {
        kind = VarietyKind::Affine;
      } else if (value == "projective") {
        kind = VarietyKind::Projective;
      } else {
        syntax(line_no, "kind must be 'affine' or 'projective'");
      }
    } else if (key == "gen") {
      if (value.empty()) syntax(line_no, "empty generator");
      gens.push_back(value);
      gen_lines.push_back(line_no);
    } else {
      syntax(line_no, "unknown key '" + key + "'");
    }
  }
  if (!vars) throw Error(ErrorCategory::SyntaxError, "missing 'vars' line");
  if (!codim) throw Error(ErrorCategory::SyntaxError, "missing 'codim' line");
  if (gens.empty()) throw Error(ErrorCategory::SyntaxError, "no 'gen' lines");

  auto ring = make_ring(*vars, Domain::complex_double());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      (void)parse_polynomial<Complex>(gens[i], ring);
    } catch (const ParseError& e) {
      throw ParseError(e.category(), "line " + std::to_string(gen_lines[i]) + ": " + e.detail(), e.position());
    }
  }
  return make_variety(*vars, gens, *codim, kind);
}

VarietyPresentation read_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::IoError, "cannot open system file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::string format_system(const VarietyPresentation& v) {
  std::string out = "vars:";
  for (const auto& name : v.variables()) out += " " + name;
  out += "\ncodim: " + std::to_string(v.codim) + "\nkind: " + to_string(v.kind) + "\n";
  for (const auto& g : v.sources) out += "gen: " + g + "\n";
  return out;
}

void write_system_file(const VarietyPresentation& v, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCategory::IoError, "cannot write system file " + path.string());
  out << format_system(v);
  if (!out) throw Error(ErrorCategory::IoError, "error while writing " + path.string());
}

}  // namespace eddefect
