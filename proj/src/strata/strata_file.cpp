#include "eddefect/strata/strata_file.hpp"

#include <fstream>
#include <sstream>

#include "eddefect/error.hpp"
#include "json.hpp"

namespace eddefect {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCategory::SyntaxError, "strata file: " + message); }

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " lacks \"" + key + "\"");
  return *it;
}

long integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<long>();
}

std::string text(const json& v, const std::string& what) {
  if (!v.is_string()) bad(what + " must be a string");
  return v.get<std::string>();
}

std::map<StratumPair, Integer> pair_values(const json& list, const char* key, const char* value_key) {
  if (!list.is_array()) bad(std::string("\"") + key + "\" must be an array");
  std::map<StratumPair, Integer> out;
  for (const auto& entry : list) {
    if (!entry.is_object()) bad(std::string("entries of \"") + key + "\" must be objects");
    StratumPair p{text(field(entry, "lower", key), "lower"), text(field(entry, "upper", key), "upper")};
    if (!out.emplace(p, integer(field(entry, value_key, key), value_key)).second) {
      bad(std::string("duplicate entry in \"") + key + "\" for (" + p.first + ", " + p.second + ")");
    }
  }
  return out;
}

}  // namespace

StratumPoset parse_strata(const std::string& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");

  StratumPoset poset;
  poset.ambient_hypersurface_dim = integer(field(doc, "ambient_hypersurface_dim", "document"), "ambient_hypersurface_dim");

  const json& strata = field(doc, "strata", "document");
  if (!strata.is_array()) bad("\"strata\" must be an array");
  for (const auto& s : strata) {
    if (!s.is_object()) bad("strata entries must be objects");
    Stratum st;
    st.name = text(field(s, "name", "stratum"), "name");
    const std::string where = "stratum " + st.name;
    st.dim = integer(field(s, "dim", where), "dim");
    st.ged_closure = integer(field(s, "ged_closure", where), "ged_closure");
    const bool has_mu = s.contains("mu");
    const bool has_transversal = s.contains("mu_transversal");
    if (has_mu == has_transversal) bad(where + " must give exactly one of \"mu\" and \"mu_transversal\"");
    if (has_mu) {
      st.mu = integer(s["mu"], "mu");
    } else {
      try {
        st.mu = mu_from_transversal(integer(s["mu_transversal"], "mu_transversal"), poset.ambient_hypersurface_dim, st.dim);
      } catch (const Error& e) {
        bad(where + ": " + e.what());
      }
    }
    poset.strata.push_back(std::move(st));
  }

  if (doc.contains("order")) {
    const json& order = doc["order"];
    if (!order.is_array()) bad("\"order\" must be an array");
    for (const auto& p : order) {
      if (!p.is_array() || p.size() != 2) bad("order relations must be [lower, upper] pairs");
      poset.order.emplace_back(text(p[0], "order entry"), text(p[1], "order entry"));
    }
  }
  if (doc.contains("links")) poset.links = pair_values(doc["links"], "links", "chi_c");
  if (doc.contains("euler_obstructions")) {
    poset.euler_obstructions = pair_values(doc["euler_obstructions"], "euler_obstructions", "value");
  }
  return poset;
}

StratumPoset read_strata_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_strata(buffer.str());
}

}  // namespace eddefect
