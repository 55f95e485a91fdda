#ifndef MSL_SUITES_HPP
#define MSL_SUITES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "msl/json_io.hpp"

namespace msl {

// Scenario / parameter problems (reported with the CLI's parse exit code,
// distinct from computational msl::Error failures).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string id;
  std::string suite;
  nlohmann::json params;
  double tolerance_scale = 1.0;
};

struct SuiteResult {
  RunReport report;
  std::map<std::string, CsvTable> series;
};

// Names of every check suite, in canonical order.
const std::vector<std::string>& suite_names();

// Static catalog: per suite, the assertions it runs and the equation tag
// each one reproduces.
struct SuiteInfo {
  std::string name;
  std::vector<std::pair<std::string, std::string>> assertions;  // name, anchor
};
const std::vector<SuiteInfo>& suite_catalog();

SuiteResult run_suite(const Scenario& scenario);

// Parses a scenario file (throws ScenarioError on malformed input).
std::vector<Scenario> parse_scenarios(const std::string& json_text);

// Default scenario for an inline `run --suite NAME` invocation.
Scenario default_scenario(const std::string& suite);

}  // namespace msl

#endif  // MSL_SUITES_HPP
