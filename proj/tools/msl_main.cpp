// Batch verification harness: runs named check suites against scenario
// descriptions and emits machine-readable reports plus CSV plot data.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msl/error.hpp"
#include "msl/json_io.hpp"
#include "msl/suites.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitComputationalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw msl::ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct InlineParams {
  std::vector<std::pair<std::string, double>> values;

  void set(const std::string& key, double v) { values.push_back({key, v}); }
  bool empty() const { return values.empty(); }
};

std::vector<msl::Scenario> gather_scenarios(const std::string& suite,
                                            const std::string& scenario_path,
                                            double tolerance_scale,
                                            const InlineParams& inline_params) {
  std::vector<msl::Scenario> scenarios;
  if (!scenario_path.empty()) {
    if (!inline_params.empty())
      throw msl::ScenarioError(
          "inline parameter flags only combine with --suite; put parameters "
          "in the scenario file instead");
    scenarios = msl::parse_scenarios(read_file(scenario_path));
  } else if (!suite.empty()) {
    msl::Scenario sc = msl::default_scenario(suite);
    for (const auto& [key, value] : inline_params.values) sc.params[key] = value;
    scenarios.push_back(sc);
  } else {
    throw msl::ScenarioError("either --suite or --scenario is required");
  }
  for (auto& sc : scenarios) sc.tolerance_scale *= tolerance_scale;
  return scenarios;
}

std::vector<msl::SuiteResult> run_all(std::vector<msl::Scenario> scenarios,
                                      int jobs) {
  // Scenarios run in parallel up to the --jobs bound; results are merged
  // by scenario id so output order is deterministic.
  std::vector<msl::SuiteResult> results(scenarios.size());
  if (jobs < 1) jobs = 1;
  size_t next = 0;
  std::vector<std::future<void>> workers;
  std::mutex mu;
  for (int w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= scenarios.size()) return;
          i = next++;
        }
        results[i] = msl::run_suite(scenarios[i]);
      }
    }));
  }
  for (auto& f : workers) f.get();

  std::vector<size_t> order(results.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return results[a].report.scenario_id < results[b].report.scenario_id;
  });
  std::vector<msl::SuiteResult> sorted;
  sorted.reserve(results.size());
  for (size_t i : order) sorted.push_back(std::move(results[i]));
  return sorted;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

int cmd_run(const std::string& suite, const std::string& scenario_path,
            int jobs, const std::string& out_dir, double tolerance_scale,
            const InlineParams& inline_params) {
  auto results = run_all(
      gather_scenarios(suite, scenario_path, tolerance_scale, inline_params),
      jobs);
  bool all_pass = true;
  for (const auto& res : results) {
    const msl::RunReport& rep = res.report;
    all_pass = all_pass && rep.pass;
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_text(fs::path(out_dir) / (rep.scenario_id + ".report.json"),
                 msl::to_json(rep));
    } else {
      std::cout << msl::to_json(rep) << "\n";
    }
    std::fprintf(stderr, "scenario %s [%s]: %s (%zu assertions, %.0f ms)\n",
                 rep.scenario_id.c_str(), rep.suite.c_str(),
                 rep.pass ? "PASS" : "FAIL", rep.assertions.size(),
                 rep.wall_ms);
    for (const auto& a : rep.assertions)
      if (!a.pass)
        std::fprintf(stderr, "  FAIL %s [%s] measured=%s bound=%s\n",
                     a.name.c_str(), a.anchor.c_str(),
                     msl::decimal17(a.measured).c_str(),
                     msl::decimal17(a.bound).c_str());
  }
  return all_pass ? kExitPass : kExitAssertionFailure;
}

int cmd_list_suites() {
  for (const auto& info : msl::suite_catalog()) {
    std::cout << info.name << "\n";
    for (const auto& [name, anchor] : info.assertions)
      std::cout << "  " << name << "  [" << anchor << "]\n";
  }
  return kExitPass;
}

int cmd_emit_plots(const std::string& suite, const std::string& scenario_path,
                   const std::vector<std::string>& series,
                   const std::string& out_dir, double tolerance_scale,
                   const InlineParams& inline_params) {
  if (series.empty()) return kExitPass;  // nothing selected, nothing written
  auto results = run_all(
      gather_scenarios(suite, scenario_path, tolerance_scale, inline_params),
      1);
  fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  for (const auto& res : results) {
    for (const auto& name : series) {
      auto it = res.series.find(name);
      if (it == res.series.end())
        msl::fail(msl::ErrorCode::unknown_series,
                  "suite '" + res.report.suite + "' has no series '" + name +
                      "'");
      write_text(dir / (res.report.scenario_id + "." + name + ".csv"),
                 msl::csv_string(it->second));
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced-metric surgery verification harness"};
  app.require_subcommand(1);

  std::string suite, scenario_path, out_dir;
  int jobs = 1;
  double tolerance_scale = 1.0;
  std::vector<std::string> series;
  std::vector<std::string> param_kv;
  InlineParams inline_params;

  auto* run = app.add_subcommand("run", "Run check suites");
  run->add_option("--suite", suite, "Run one suite with default parameters");
  run->add_option("--scenario", scenario_path, "Scenario JSON file");
  run->add_option("--jobs", jobs, "Parallel scenario evaluation bound");
  run->add_option("--out", out_dir, "Directory for report files");
  run->add_option("--tolerance-scale", tolerance_scale,
                  "Multiply assertion tolerances (testing aid)");
  // Inline parameter shorthands for --suite invocations.
  double t0_v, mass_v, eps_v, a_v, R_v, lambda_v, r0_v;
  run->add_option("--t0", t0_v, "Suite parameter t0")
      ->each([&](const std::string& s) { inline_params.set("t0", std::stod(s)); });
  run->add_option("--mass", mass_v, "Suite parameter mass")
      ->each([&](const std::string& s) { inline_params.set("mass", std::stod(s)); });
  run->add_option("--eps", eps_v, "Suite parameter eps")
      ->each([&](const std::string& s) { inline_params.set("eps", std::stod(s)); });
  run->add_option("--a", a_v, "Suite parameter a (torus cosine)")
      ->each([&](const std::string& s) { inline_params.set("a", std::stod(s)); });
  run->add_option("--R", R_v, "Suite parameter R")
      ->each([&](const std::string& s) { inline_params.set("R", std::stod(s)); });
  run->add_option("--lambda", lambda_v, "Suite parameter lambda")
      ->each([&](const std::string& s) { inline_params.set("lambda", std::stod(s)); });
  run->add_option("--r0", r0_v, "Suite parameter r0")
      ->each([&](const std::string& s) { inline_params.set("r0", std::stod(s)); });
  run->add_option("--param", param_kv,
                  "Additional suite parameter as key=value");

  auto* ls = app.add_subcommand("list-suites",
                                "List every suite, its assertions and the "
                                "equation each reproduces");

  auto* plots = app.add_subcommand("emit-plots", "Write CSV plot data");
  plots->add_option("--suite", suite, "Suite to run");
  plots->add_option("--scenario", scenario_path, "Scenario JSON file");
  plots->add_option("--series", series, "Series names to emit");
  plots->add_option("--out", out_dir, "Output directory");
  plots->add_option("--tolerance-scale", tolerance_scale,
                    "Multiply assertion tolerances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitParseError;
  }

  try {
    for (const auto& kv : param_kv) {
      auto pos = kv.find('=');
      if (pos == std::string::npos)
        throw msl::ScenarioError("--param expects key=value, got '" + kv + "'");
      inline_params.set(kv.substr(0, pos), std::stod(kv.substr(pos + 1)));
    }
    if (run->parsed())
      return cmd_run(suite, scenario_path, jobs, out_dir, tolerance_scale,
                     inline_params);
    if (ls->parsed()) return cmd_list_suites();
    if (plots->parsed())
      return cmd_emit_plots(suite, scenario_path, series, out_dir,
                            tolerance_scale, inline_params);
  } catch (const msl::ScenarioError& e) {
    std::fprintf(stderr, "scenario error: %s\n", e.what());
    return kExitParseError;
  } catch (const msl::Error& e) {
    std::fprintf(stderr, "computational error: %s\n", e.what());
    return kExitComputationalError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitComputationalError;
  }
  return kExitParseError;
}
