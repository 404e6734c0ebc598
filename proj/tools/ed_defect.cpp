#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eddefect/critical/system_file.hpp"
#include "eddefect/groebner/ed_oracle.hpp"
#include "eddefect/groebner/milnor.hpp"
#include "eddefect/homotopy/ed_degree.hpp"
#include "eddefect/homotopy/singular_locus.hpp"
#include "eddefect/poly/parser.hpp"
#include "eddefect/segre/series.hpp"
#include "eddefect/strata/strata_file.hpp"
#include "eddefect/util/random.hpp"
#include "json.hpp"

using namespace eddefect;
using nlohmann::json;

namespace {

constexpr int kExitError = 2;
constexpr int kExitDisagreement = 3;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

json to_json(const VectorXc& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back({x[i].real(), x[i].imag()});
  return out;
}

json to_json(const PathSummary& s) {
  return {{"paths", s.paths}, {"converged", s.converged}, {"diverged", s.diverged}, {"stalled", s.stalled}};
}

json to_json(const EdDegreeResult& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back({{"seed", run.seed},
                    {"count", run.count},
                    {"raw_solutions", run.raw_solutions},
                    {"paths", to_json(run.summary)}});
  }
  return runs;
}

json to_json(const OracleResult& r) {
  json runs = json::array();
  for (const auto& run : r.runs) runs.push_back({{"prime", run.prime}, {"seed", run.seed}, {"count", run.count}});
  return runs;
}

std::string coefficient_text(const GaussianRational& c) {
  static const RingPtr ring = make_ring({"x"}, Domain::rational());
  return QPoly::constant(ring, c).to_string();
}

std::vector<GaussianRational> parse_weights(const std::string& text) {
  static const RingPtr ring = make_ring({"x"}, Domain::rational());
  std::vector<GaussianRational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    QPoly p = parse_polynomial<GaussianRational>(item, ring);
    if (p.total_degree() > 0) throw Error(ErrorCategory::InvalidArgument, "weight '" + item + "' is not a number");
    out.push_back(p.constant_term());
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ED_DEFECT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCategory::InvalidArgument, std::string("ED_DEFECT_SEED is not an integer: ") + env);
  }
  return 1;
}

struct Common {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t runs = 2;

  TrackerSettings tracker() const {
    TrackerSettings s;
    s.seed = seed;
    s.threads = threads;
    s.validate();
    return s;
  }
};

struct Report {
  json doc;
  json timings = json::object();
  std::string summary;
  int exit_code = 0;
};

json mode_json(const EdMode& mode) {
  json out = {{"mode", to_string(mode)}};
  if (mode.kind == EdMode::Weighted) {
    json w = json::array();
    for (const auto& x : mode.weights) w.push_back(coefficient_text(x));
    out["weights"] = w;
  }
  return out;
}

json base_report(const std::string& command, const Common& common) {
  return {{"command", command}, {"seed", common.seed}, {"threads", common.threads}};
}

EdMode parse_mode(const std::string& mode, const std::string& weights) {
  if (mode == "unit") return EdMode::unit();
  if (mode == "generic") return EdMode::generic();
  if (weights.empty()) throw Error(ErrorCategory::InvalidArgument, "--mode weighted needs --weights");
  return EdMode::weighted(parse_weights(weights));
}

json oracle_block(const VarietyPresentation& v, const EdMode& mode, std::uint64_t seed, std::uint64_t homotopy_count,
                  bool& agree, double& ms) {
  Stopwatch clock;
  const auto oracle = symbolic_ed_degree(v, mode, derive_seed(seed, "oracle"));
  agree = oracle.degree == homotopy_count;
  ms = clock.ms();
  return {{"degree", oracle.degree}, {"runs", to_json(oracle)}, {"agree", agree}};
}

Report run_ed_degree(const Common& c, const std::string& system, const std::string& mode_text,
                     const std::string& weights, bool oracle) {
  const auto v = read_system_file(system);
  const EdMode mode = parse_mode(mode_text, weights);
  Report r;
  r.doc = base_report("ed-degree", c);
  r.doc["inputs"] = mode_json(mode);
  r.doc["inputs"]["system"] = system;
  Stopwatch clock;
  const auto result = ed_degree(v, mode, c.tracker(), c.runs);
  r.doc["result"] = {{"ed_degree", result.degree}};
  r.timings["homotopy"] = clock.ms();
  r.doc["routes"] = {{"homotopy", {{"degree", result.degree}, {"runs", to_json(result)}}}};
  r.summary = to_string(mode) + " ED degree " + std::to_string(result.degree);
  if (oracle) {
    bool agree = false;
    double ms = 0;
    r.doc["routes"]["oracle"] = oracle_block(v, mode, c.seed, result.degree, agree, ms);
    r.timings["oracle"] = ms;
    r.doc["result"]["oracle_agrees"] = agree;
    r.summary += agree ? " (oracle agrees)" : " (oracle DISAGREES)";
    if (!agree) r.exit_code = kExitDisagreement;
  }
  return r;
}

Report run_ed_defect(const Common& c, const std::string& system, bool oracle) {
  const auto v = read_system_file(system);
  Report r;
  r.doc = base_report("ed-defect", c);
  r.doc["inputs"] = {{"system", system}};
  Stopwatch clock;
  const auto result = ed_defect(v, c.tracker(), c.runs);
  r.doc["result"] = {{"generic", result.generic.degree}, {"unit", result.unit.degree}, {"defect", result.defect}};
  r.timings["homotopy"] = clock.ms();
  r.doc["routes"] = {{"homotopy", {{"generic_runs", to_json(result.generic)}, {"unit_runs", to_json(result.unit)}}}};
  r.summary = "GED " + std::to_string(result.generic.degree) + ", UED " + std::to_string(result.unit.degree) +
              ", DED " + std::to_string(result.defect);
  if (oracle) {
    bool generic_agree = false;
    bool unit_agree = false;
    double generic_ms = 0, unit_ms = 0;
    r.doc["routes"]["oracle"] = {
        {"generic", oracle_block(v, EdMode::generic(), c.seed, result.generic.degree, generic_agree, generic_ms)},
        {"unit", oracle_block(v, EdMode::unit(), c.seed, result.unit.degree, unit_agree, unit_ms)}};
    r.timings["oracle"] = generic_ms + unit_ms;
    const bool agree = generic_agree && unit_agree;
    r.doc["result"]["oracle_agrees"] = agree;
    r.summary += agree ? " (oracle agrees)" : " (oracle DISAGREES)";
    if (!agree) r.exit_code = kExitDisagreement;
  }
  return r;
}

Report run_oracle(const Common& c, const std::string& system, const std::string& mode_text, const std::string& weights,
                  std::uint32_t prime) {
  const auto v = read_system_file(system);
  const EdMode mode = parse_mode(mode_text, weights);
  Report r;
  r.doc = base_report("oracle", c);
  r.doc["inputs"] = mode_json(mode);
  r.doc["inputs"]["system"] = system;
  r.doc["inputs"]["prime"] = prime;
  Stopwatch clock;
  OracleOptions opts;
  opts.prime = prime;
  const auto result = symbolic_ed_degree(v, mode, derive_seed(c.seed, "oracle"), opts);
  r.doc["result"] = {{"ed_degree", result.degree}};
  r.timings["oracle"] = clock.ms();
  r.doc["routes"] = {{"oracle", {{"runs", to_json(result)}}}};
  r.summary = to_string(mode) + " ED degree " + std::to_string(result.degree) + " (prime field)";
  return r;
}

Report run_milnor(const Common& c, const std::string& poly, const std::string& vars, unsigned cap) {
  std::vector<std::string> names;
  std::stringstream in(vars);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) names.push_back(item);
  }
  if (names.empty()) throw Error(ErrorCategory::InvalidArgument, "--vars is empty");
  const auto ring = make_ring(names, Domain::rational());
  const QPoly g = parse_polynomial<GaussianRational>(poly, ring);
  Report r;
  r.doc = base_report("milnor", c);
  r.doc["inputs"] = {{"poly", poly}, {"vars", names}, {"cap", cap}};
  Stopwatch clock;
  const auto result = milnor_number(g, cap);
  json basis = json::array();
  for (const auto& m : result.standard_monomials) basis.push_back(QPoly::term(ring, m, 1).to_string());
  r.doc["result"] = {{"mu", result.mu}};
  r.timings["milnor"] = clock.ms();
  r.doc["routes"] = {{"local_standard_basis", {{"standard_monomials", basis}}}};
  r.summary = "Milnor number " + std::to_string(result.mu);
  return r;
}

Report run_sing_locus(const Common& c, const std::string& system) {
  const auto v = read_system_file(system);
  Report r;
  r.doc = base_report("sing-locus", c);
  r.doc["inputs"] = {{"system", system}};
  Stopwatch clock;
  const auto points = isolated_singularities(v, c.tracker());
  const double solve_ms = clock.ms();

  json list = json::array();
  std::vector<Integer> mus;
  bool all_exact = v.exact.has_value();
  for (const auto& p : points) {
    json entry = {{"point", to_json(p)}};
    if (v.exact) {
      try {
        const auto exact = rationalize_point(std::span<const Complex>(p.data(), static_cast<std::size_t>(p.size())));
        json coords = json::array();
        for (const auto& x : exact) coords.push_back(coefficient_text(x));
        entry["exact_point"] = coords;
        const auto graph = milnor_at_point(v, exact, MilnorRoute::Graph);
        const auto le_greuel = milnor_at_point(v, exact, MilnorRoute::LeGreuel);
        entry["mu"] = graph.mu;
        entry["mu_le_greuel"] = le_greuel.mu;
        if (graph.mu != le_greuel.mu) {
          throw Error(ErrorCategory::OracleDisagreement, "Milnor routes disagree at a singular point");
        }
        mus.push_back(graph.mu);
      } catch (const Error& e) {
        if (e.category() != ErrorCategory::NotExact) throw;
        all_exact = false;
        entry["mu"] = nullptr;
      }
    }
    list.push_back(std::move(entry));
  }
  r.doc["result"] = {{"num_points", points.size()}, {"points", list}};
  r.summary = std::to_string(points.size()) + " isolated non-transversal points";
  if (all_exact) {
    r.doc["result"]["sum_mu"] = to_json(ded_isolated(mus));
    r.summary += ", sum of Milnor numbers " + ded_isolated(mus).str();
  }
  r.timings["homotopy"] = solve_ms;
  r.timings["milnor"] = clock.ms() - solve_ms;
  return r;
}

Report run_strata_defect(const Common& c, const std::string& spec) {
  const auto poset = read_strata_file(spec);
  Report r;
  r.doc = base_report("strata-defect", c);
  r.doc["inputs"] = {{"spec", spec}};
  const auto t = b_from_links(poset);
  const auto alpha = alpha_coefficients(poset);
  auto matrix = [](const IntegerMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json out = json::array();
      for (const auto& v : row) out.push_back(to_json(v));
      rows.push_back(out);
    }
    return rows;
  };
  json table = json::array();
  for (const auto& name : t.names) {
    const auto& s = *std::find_if(poset.strata.begin(), poset.strata.end(), [&](const Stratum& x) { return x.name == name; });
    table.push_back({{"name", name},
                     {"dim", s.dim},
                     {"mu", to_json(s.mu)},
                     {"alpha", to_json(alpha.at(name))},
                     {"ged_closure", to_json(s.ged_closure)}});
  }
  const Integer ded = ded_from_strata(poset);
  r.doc["result"] = {{"defect", to_json(ded)}};
  r.doc["routes"] = {{"strata", {{"order", t.names}, {"B", matrix(t.B)}, {"A", matrix(t.A)}, {"strata", table}}}};
  r.summary = "DED " + ded.str() + " from " + std::to_string(poset.strata.size()) + " strata";
  return r;
}

Report run_segre_defect(const Common& c, unsigned s, unsigned t, unsigned cap) {
  Report r;
  r.doc = base_report("segre-defect", c);
  r.doc["inputs"] = {{"s", s}, {"t", t}, {"cap", cap}};
  const Integer product = ded_rank_one(s, t);
  const Integer binomial = ded_rank_one_binomial(s, t, cap);
  const Integer incl_excl = ded_rank_one_inclusion_exclusion(s, t);
  const bool agree = product == binomial && product == incl_excl;
  r.doc["result"] = {{"defect", to_json(product)}, {"routes_agree", agree}};
  r.doc["routes"] = {{"product", to_json(product)},
                     {"binomial", to_json(binomial)},
                     {"inclusion_exclusion", to_json(incl_excl)},
                     {"euler_characteristics",
                      {{"Z", to_json(chi_value(ChiKind::Z, s, t))},
                       {"Z_Q", to_json(chi_value(ChiKind::ZQ, s, t))},
                       {"Z_H", to_json(chi_value(ChiKind::ZH, s, t))},
                       {"Z_Q_H", to_json(chi_value(ChiKind::ZQH, s, t))}}}};
  r.summary = "DED " + product.str() + (agree ? ", routes agree" : ", routes DISAGREE");
  if (!agree) r.exit_code = kExitDisagreement;
  return r;
}

Report run_slice(const Common& c, const std::string& system, std::size_t k, const std::string& out) {
  const auto v = read_system_file(system);
  const auto sliced = slice_with_generic_linear(v, k, c.seed);
  write_system_file(sliced, out);
  Report r;
  r.doc = base_report("slice", c);
  r.doc["inputs"] = {{"system", system}, {"k", k}, {"out", out}};
  json added = json::array();
  for (std::size_t i = v.sources.size(); i < sliced.sources.size(); ++i) added.push_back(sliced.sources[i]);
  r.doc["result"] = {{"codim", sliced.codim}, {"dim", sliced.dim()}, {"added", added}};
  r.summary = "wrote " + out + " (dimension " + std::to_string(sliced.dim()) + ")";
  return r;
}

int emit_error(ErrorCategory category, const std::string& message) {
  json err = {{"error", {{"category", std::string(to_string(category))}, {"message", message}}}};
  std::cout << err.dump(2) << '\n';
  std::cerr << "error: " << to_string(category) << ": " << message << '\n';
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean distance degrees and their defects"};
  app.require_subcommand(1);

  Common common;
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_option_function<std::uint64_t>(
         "--seed", [&](const std::uint64_t& v) { seed = v; seed_given = true; },
         "random seed (default: ED_DEFECT_SEED or 1)")
      ->configurable(false);
  app.add_option("--threads", common.threads, "path-tracking threads")->check(CLI::Range(1u, 256u));
  app.add_option("--runs", common.runs, "independent seeds per count")->check(CLI::Range(1u, 16u));

  std::string system, mode = "generic", weights, poly, vars, spec, out;
  bool oracle = false;
  unsigned cap = kDefaultMilnorCap;
  unsigned segre_cap = kDefaultSegreCap;
  unsigned s = 0, t = 0;
  std::size_t k = 1;
  std::uint32_t prime = 0;
  std::function<Report()> action;

  auto* ed = app.add_subcommand("ed-degree", "ED degree by homotopy continuation");
  ed->add_option("--system", system, "system file")->required();
  ed->add_option("--mode", mode, "unit, generic or weighted")->check(CLI::IsMember({"unit", "generic", "weighted"}));
  ed->add_option("--weights", weights, "comma-separated weights for --mode weighted");
  ed->add_flag("--oracle", oracle, "also count over a prime field");
  ed->callback([&] { action = [&] { return run_ed_degree(common, system, mode, weights, oracle); }; });

  auto* defect = app.add_subcommand("ed-defect", "generic and unit ED degrees and their difference");
  defect->add_option("--system", system, "system file")->required();
  defect->add_flag("--oracle", oracle, "also count over a prime field");
  defect->callback([&] { action = [&] { return run_ed_defect(common, system, oracle); }; });

  auto* orc = app.add_subcommand("oracle", "ED degree by Groebner bases over a prime field");
  orc->add_option("--system", system, "system file")->required();
  orc->add_option("--mode", mode, "unit, generic or weighted")->check(CLI::IsMember({"unit", "generic", "weighted"}));
  orc->add_option("--weights", weights, "comma-separated weights for --mode weighted");
  orc->add_option("--prime", prime, "first prime (default 32003)");
  orc->callback([&] { action = [&] { return run_oracle(common, system, mode, weights, prime); }; });

  auto* mil = app.add_subcommand("milnor", "Milnor number at the origin");
  mil->add_option("--poly", poly, "polynomial")->required();
  mil->add_option("--vars", vars, "comma-separated variables")->required();
  mil->add_option("--cap", cap, "largest Milnor number searched");
  mil->callback([&] { action = [&] { return run_milnor(common, poly, vars, cap); }; });

  auto* sing = app.add_subcommand("sing-locus", "points where X meets the isotropic quadric non-transversally");
  sing->add_option("--system", system, "system file")->required();
  sing->callback([&] { action = [&] { return run_sing_locus(common, system); }; });

  auto* strata = app.add_subcommand("strata-defect", "defect from a stratification");
  strata->add_option("--spec", spec, "strata file")->required();
  strata->callback([&] { action = [&] { return run_strata_defect(common, spec); }; });

  auto* segre = app.add_subcommand("segre-defect", "defect of s x t rank-one matrices");
  segre->add_option("S", s, "rows")->required()->check(CLI::Range(1u, 64u));
  segre->add_option("T", t, "columns")->required()->check(CLI::Range(1u, 64u));
  segre->add_option("--cap", segre_cap, "truncation for the binomial route");
  segre->callback([&] { action = [&] { return run_segre_defect(common, s, t, segre_cap); }; });

  auto* slice = app.add_subcommand("slice", "intersect with generic hyperplanes");
  slice->add_option("--system", system, "system file")->required();
  slice->add_option("--k", k, "number of hyperplanes")->required();
  slice->add_option("--out", out, "output system file")->required();
  slice->callback([&] { action = [&] { return run_slice(common, system, k, out); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(ErrorCategory::InvalidArgument, e.what());
  }

  try {
    common.seed = seed_given ? seed : default_seed();
    Stopwatch clock;
    Report report = action();
    report.timings["total"] = clock.ms();
    report.doc["timings_ms"] = report.timings;
    std::cout << report.doc.dump(2) << '\n';
    std::cerr << report.summary << '\n';
    return report.exit_code;
  } catch (const Error& e) {
    return emit_error(e.category(), e.what());
  } catch (const std::exception& e) {
    return emit_error(ErrorCategory::InvalidArgument, e.what());
  }
}
