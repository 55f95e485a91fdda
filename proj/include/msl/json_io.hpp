#ifndef MSL_JSON_IO_HPP
#define MSL_JSON_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "msl/functionals.hpp"
#include "msl/surgery.hpp"

namespace msl {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolkitVersion = "0.1.0";

// All numeric payloads serialize as decimal strings with 17 significant
// digits so that reports are byte-stable across platforms.
std::string decimal17(double x);

struct Assertion {
  std::string name;
  std::string anchor;    // equation tag the check reproduces, e.g. "2.51"
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
};

struct RunReport {
  std::string scenario_id;
  std::string suite;
  std::vector<Assertion> assertions;
  bool pass = false;
  double wall_ms = 0.0;  // excluded from determinism comparisons
  std::string version = kToolkitVersion;
  std::string input_digest;
};

struct CsvTable {
  std::string header;  // single comment-free header line naming columns/units
  std::vector<std::vector<double>> rows;
};

std::string to_json(const RunReport& report);
std::string to_json(const ComparisonVerdict& verdict);
std::string to_json(const FunctionalReport& report);
std::string to_json(const ResidualReport& report);

std::string csv_string(const CsvTable& table);

// FNV-1a of the canonical input payload.
std::string digest(const std::string& payload);

}  // namespace msl

#endif  // MSL_JSON_IO_HPP
