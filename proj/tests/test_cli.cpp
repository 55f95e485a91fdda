// End-to-end tests of the msl binary: exit codes, determinism, listing,
// plot emission. The binary path comes from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

#ifndef MSL_CLI_PATH
#define MSL_CLI_PATH "msl"
#endif

struct RunOutput {
  int exit_code = -1;
  std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
  fs::path tmp = fs::temp_directory_path() / "msl_cli_out.txt";
  std::string cmd = std::string(MSL_CLI_PATH) + " " + args + " > " +
                    tmp.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunOutput out;
  out.exit_code = WEXITSTATUS(raw);
  std::ifstream in(tmp);
  std::ostringstream buf;
  buf << in.rdbuf();
  out.stdout_text = buf.str();
  return out;
}

std::string strip_wall_time(std::string text) {
  static const std::regex wall("\"wall_ms\":[^,\n]*");
  return std::regex_replace(text, wall, "\"wall_ms\": X");
}

std::string write_scenario(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << body;
  return p.string();
}

}  // namespace

TEST_CASE("run --suite: pass exits 0") {
  RunOutput r = run_cli("run --suite collapse");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("unknown suite exits 2") {
  RunOutput r = run_cli("run --suite not_a_suite");
  CHECK(r.exit_code == 2);
}

TEST_CASE("malformed scenario file exits 2") {
  std::string p = write_scenario("bad.json", "{ not json");
  RunOutput r = run_cli("run --scenario " + p);
  CHECK(r.exit_code == 2);

  std::string p2 = write_scenario(
      "unknown_check.json",
      R"({"schema_version":1,"scenarios":[{"id":"x","check":"bogus"}]})");
  CHECK(run_cli("run --scenario " + p2).exit_code == 2);

  std::string p3 = write_scenario(
      "unknown_param.json",
      R"({"schema_version":1,"scenarios":[{"id":"x","check":"collapse",
          "params":{"no_such_knob":1}}]})");
  CHECK(run_cli("run --scenario " + p3).exit_code == 2);

  std::string p4 = write_scenario(
      "bad_tol.json",
      R"({"schema_version":1,"scenarios":[{"id":"x","check":"collapse",
          "tolerance_scale":-1}]})");
  CHECK(run_cli("run --scenario " + p4).exit_code == 2);
}

TEST_CASE("computational module errors exit 3") {
  // a^2 >= 1 passes the scenario schema but the cusp constructor rejects it.
  std::string p = write_scenario(
      "degenerate.json",
      R"({"schema_version":1,"scenarios":[{"id":"x","check":"cusp_identities",
          "params":{"a":1.5}}]})");
  RunOutput r = run_cli("run --scenario " + p);
  CHECK(r.exit_code == 3);
}

TEST_CASE("deliberately failing tolerance exits 1") {
  // The static-vacuum residual is small but genuinely nonzero, so scaling
  // its tolerance to the floor must flip the verdict.
  RunOutput r = run_cli("run --suite residuals --tolerance-scale 1e-16");
  CHECK(r.exit_code == 1);
}

TEST_CASE("reports are deterministic apart from wall time") {
  RunOutput a = run_cli("run --suite functional_identities");
  RunOutput b = run_cli("run --suite functional_identities --jobs 2");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(strip_wall_time(a.stdout_text) == strip_wall_time(b.stdout_text));
  CHECK(a.stdout_text.find("\"input_digest\"") != std::string::npos);
}

TEST_CASE("list-suites: nine suites, anchors present") {
  RunOutput r = run_cli("list-suites");
  CHECK(r.exit_code == 0);
  for (const char* name :
       {"dehn_fill", "sphere_case_i", "sphere_case_ii",
        "schwarzschild_identities", "cusp_identities",
        "functional_identities", "collapse", "residuals", "conformal"}) {
    CHECK(r.stdout_text.find(name) != std::string::npos);
  }
  for (const char* anchor : {"[2.51]", "[3.8]", "[3.22]"})
    CHECK(r.stdout_text.find(anchor) != std::string::npos);
  // Every assertion line carries a nonempty anchor.
  CHECK(r.stdout_text.find("[]") == std::string::npos);
}

TEST_CASE("scenario batch with --out writes one report per id") {
  fs::path dir = fs::temp_directory_path() / "msl_batch";
  fs::remove_all(dir);
  std::string p = write_scenario(
      "batch.json",
      R"({"schema_version":1,"scenarios":[
          {"id":"c1","check":"collapse"},
          {"id":"c2","check":"cusp_identities","params":{"a":0.25}}]})");
  RunOutput r = run_cli("run --scenario " + p + " --jobs 2 --out " +
                        dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "c1.report.json"));
  CHECK(fs::exists(dir / "c2.report.json"));
}

TEST_CASE("emit-plots: series files, empty selection, unknown series") {
  fs::path dir = fs::temp_directory_path() / "msl_plots";
  fs::remove_all(dir);
  RunOutput r = run_cli("emit-plots --suite dehn_fill --series r_s --series "
                        "r_f --out " +
                        dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "dehn_fill.r_s.csv"));
  CHECK(fs::exists(dir / "dehn_fill.r_f.csv"));
  {
    std::ifstream in(dir / "dehn_fill.r_s.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,s");
    std::string first_row;
    std::getline(in, first_row);
    CHECK(!first_row.empty());
  }

  // Empty selection: no files, success.
  fs::path dir2 = fs::temp_directory_path() / "msl_plots_empty";
  fs::remove_all(dir2);
  RunOutput r2 = run_cli("emit-plots --suite dehn_fill --out " + dir2.string());
  CHECK(r2.exit_code == 0);
  CHECK(!fs::exists(dir2 / "dehn_fill.r_s.csv"));

  // Unknown series: computational error.
  RunOutput r3 = run_cli("emit-plots --suite collapse --series r_s --out " +
                         dir.string());
  CHECK(r3.exit_code == 3);
}

TEST_CASE("MSL_GRID_POINTS overrides the grid density") {
  fs::path tmp = fs::temp_directory_path() / "msl_env_out.txt";
  std::string cmd = std::string("MSL_GRID_POINTS=128 ") + MSL_CLI_PATH +
                    " run --suite cusp_identities > " + tmp.string() +
                    " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 0);
}
