#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int exit_code = 0;
  json doc;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" EDDEFECT_CLI "' " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  Run r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.doc = json::parse(out, nullptr, false);
  return r;
}

std::string data(const std::string& rel) { return "'" EDDEFECT_DATA_DIR "/" + rel + "'"; }

json without_timings(json d) {
  d.erase("timings_ms");
  d.erase("threads");
  return d;
}

}  // namespace

TEST_CASE("cli: ed-defect on the determinant") {
  auto r = run("ed-defect --system " + data("systems/det2x2.sys") + " --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.doc["result"]["generic"] == 6);
  CHECK(r.doc["result"]["unit"] == 2);
  CHECK(r.doc["result"]["defect"] == 4);
  CHECK(r.doc["result"]["oracle_agrees"] == true);
  CHECK(r.doc["seed"] == 1);
}

TEST_CASE("cli: ed-degree modes") {
  auto unit = run("ed-degree --system " + data("systems/circle.sys") + " --mode unit");
  CHECK(unit.doc["result"]["ed_degree"] == 2);
  auto weighted = run("ed-degree --system " + data("systems/circle.sys") + " --mode weighted --weights 1,4 --oracle");
  CHECK(weighted.exit_code == 0);
  CHECK(weighted.doc["result"]["ed_degree"] == 4);
  CHECK(weighted.doc["inputs"]["weights"] == json::array({"1", "4"}));
  auto missing = run("ed-degree --system " + data("systems/circle.sys") + " --mode weighted");
  CHECK(missing.exit_code != 0);
  CHECK(missing.doc["error"]["category"] == "InvalidArgument");
}

TEST_CASE("cli: strata, segre and milnor") {
  auto strata = run("strata-defect --spec " + data("strata/quadric_surface.strata"));
  CHECK(strata.doc["result"]["defect"] == 5);
  CHECK(strata.doc["routes"]["strata"]["B"] == json::parse("[[1,0,-1],[0,1,-1],[0,0,1]]"));

  auto segre = run("segre-defect 2 2");
  CHECK(segre.exit_code == 0);
  CHECK(segre.doc["result"]["defect"] == 4);
  CHECK(segre.doc["result"]["routes_agree"] == true);

  auto mu = run("milnor --poly 'x^3 + y^4' --vars x,y");
  CHECK(mu.doc["result"]["mu"] == 6);
  auto bad = run("milnor --poly 'x^2*y' --vars x,y");
  CHECK(bad.exit_code != 0);
  CHECK(bad.doc["error"]["category"] == "NonIsolatedOrCapExceeded");
}

TEST_CASE("cli: singular locus") {
  auto det = run("sing-locus --system " + data("systems/det2x2.sys"));
  CHECK(det.doc["result"]["num_points"] == 4);
  CHECK(det.doc["result"]["sum_mu"] == 4);
  auto quadric = run("sing-locus --system " + data("systems/quadric_surface.sys"));
  CHECK(quadric.exit_code != 0);
  CHECK(quadric.doc["error"]["category"] == "PositiveDimensional");
}

TEST_CASE("cli: slice writes a readable system") {
  const auto out = std::filesystem::temp_directory_path() / "ed_defect_cli_slice.sys";
  auto r = run("slice --system " + data("systems/det2x2.sys") + " --k 1 --seed 5 --out '" + out.string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.doc["result"]["dim"] == 1);
  auto again = run("ed-degree --system '" + out.string() + "' --mode generic");
  CHECK(again.exit_code == 0);
  CHECK(again.doc["result"]["ed_degree"].get<int>() > 0);
  std::filesystem::remove(out);
}

TEST_CASE("cli: determinism and seeds") {
  const std::string args = "ed-defect --system " + data("systems/circle.sys");
  auto a = run(args + " --seed 11");
  auto b = run(args + " --seed 11 --threads 3");
  CHECK(without_timings(a.doc) == without_timings(b.doc));
  auto env = run(args, "ED_DEFECT_SEED=11");
  CHECK(without_timings(env.doc) == without_timings(a.doc));
  auto bad = run(args, "ED_DEFECT_SEED=abc");
  CHECK(bad.doc["error"]["category"] == "InvalidArgument");
}

TEST_CASE("cli: errors are machine readable") {
  auto missing = run("ed-defect --system /nonexistent.sys");
  CHECK(missing.exit_code == 2);
  CHECK(missing.doc["error"]["category"] == "IoError");
  auto usage = run("segre-defect 0 2");
  CHECK(usage.exit_code != 0);
  CHECK(usage.doc["error"]["category"] == "InvalidArgument");
  auto none = run("");
  CHECK(none.exit_code != 0);
}
