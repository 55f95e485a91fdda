#include "msl/json_io.hpp"

#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace msl {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string decimal17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string to_json(const RunReport& report) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario"] = report.scenario_id;
  j["suite"] = report.suite;
  j["version"] = report.version;
  j["input_digest"] = report.input_digest;
  j["pass"] = report.pass;
  j["wall_ms"] = report.wall_ms;
  j["assertions"] = ordered_json::array();
  for (const auto& a : report.assertions) {
    ordered_json ja;
    ja["name"] = a.name;
    ja["anchor"] = a.anchor;
    ja["measured"] = decimal17(a.measured);
    ja["bound"] = decimal17(a.bound);
    ja["margin"] = decimal17(a.margin);
    ja["pass"] = a.pass;
    j["assertions"].push_back(ja);
  }
  return j.dump(2);
}

std::string to_json(const ComparisonVerdict& v) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "comparison_verdict";
  j["vol_original"] = decimal17(v.vol_original);
  j["vol_glued"] = decimal17(v.vol_glued);
  j["s_minus_sq_original"] = decimal17(v.s_minus_sq_original);
  j["s_minus_sq_glued"] = decimal17(v.s_minus_sq_glued);
  j["z_sq_original"] = decimal17(v.z_sq_original);
  j["z_sq_glued"] = decimal17(v.z_sq_glued);
  j["i_eps_original"] = decimal17(v.i_eps_original);
  j["i_eps_glued"] = decimal17(v.i_eps_glued);
  j["epsilon"] = decimal17(v.epsilon);
  j["volume_decreased"] = v.volume_decreased;
  j["s_floor_preserved"] = v.s_floor_preserved;
  j["z_decreased"] = v.z_decreased;
  j["i_eps_decreased"] = v.i_eps_decreased;
  j["volume_margin"] = decimal17(v.volume_margin);
  j["z_margin"] = decimal17(v.z_margin);
  j["i_eps_margin"] = decimal17(v.i_eps_margin);
  j["s_floor"] = decimal17(v.s_floor);
  j["glued_min_s"] = decimal17(v.glued_min_s);
  return j.dump(2);
}

std::string to_json(const FunctionalReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "functional_report";
  j["volume"] = decimal17(r.volume);
  j["s_sq_integral"] = decimal17(r.s_sq_integral);
  j["s_minus_sq_integral"] = decimal17(r.s_minus_sq_integral);
  j["z_sq_integral"] = decimal17(r.z_sq_integral);
  j["s_l2"] = decimal17(r.s_l2);
  j["s_minus_l2"] = decimal17(r.s_minus_l2);
  j["i_eps_minus"] = decimal17(r.i_eps_minus);
  j["epsilon"] = decimal17(r.epsilon);
  j["quadrature_error"] = decimal17(r.quadrature_error);
  if (r.sigma_normalization)
    j["sigma_normalization"] = decimal17(*r.sigma_normalization);
  else
    j["sigma_normalization"] = nullptr;  // undefined when s^- vanishes
  return j.dump(2);
}

std::string to_json(const ResidualReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "residual_report";
  j["equation"] = r.equation;
  j["sup_primary"] = decimal17(r.sup_primary);
  j["l2_primary"] = decimal17(r.l2_primary);
  j["sup_scalar"] = decimal17(r.sup_scalar);
  j["l2_scalar"] = decimal17(r.l2_scalar);
  j["grid_points"] = r.grid_points;
  j["reduced_accuracy"] = r.reduced_accuracy;
  return j.dump(2);
}

std::string csv_string(const CsvTable& table) {
  std::ostringstream os;
  os << table.header << "\n";
  os.precision(17);
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << row[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string digest(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace msl
