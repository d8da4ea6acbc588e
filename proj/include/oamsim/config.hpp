#pragma once

// Run configuration: a JSON document with unit-suffixed keys.
//
//   {
//     "beam":     {"kinetic_energy_eV", "L", "theta", "psi", "kind", "Qs_e_m2"?},
//     "ring":     {"R0_m" | "B0_T", "n"},
//     "scenario": {"mode", "t_end_s", "steps", "omega_drive", "phi", "drive"?,
//                  "gradient_V_m2"?, "Omega_rad_s"?, "b_rad_s"?, "A_rad_s"?},
//     "scan":     {"omega_min", "omega_max", "points"},
//     "output":   {"path", "format"},
//     "oracle":   {"enabled", "tolerance"}
//   }
//
// Angles are in radians, omega_drive / omega_min / omega_max in rad/s.
// Sections are optional at parse time; each command states which it needs.
// Unknown keys are rejected.

#include "oamsim/am_core.hpp"
#include "oamsim/dynamics.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace oamsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BeamConfig {
  double kinetic_energy_eV = 0.0;
  int L = 1;
  double theta = 0.0;
  double psi = 0.0;
  PolarizationKind kind = PolarizationKind::Vector;
  std::optional<double> Qs_e_m2;
  bool operator==(const BeamConfig&) const = default;
};

struct RingConfig {
  std::optional<double> R0_m;
  std::optional<double> B0_T;
  double n = 0.0;
  bool operator==(const RingConfig&) const = default;
};

struct ScenarioConfig {
  Mode mode = Mode::Frozen;
  double t_end_s = 0.0;
  int steps = 2;
  double omega_drive = 0.0;
  double phi = 0.0;
  DriveModel drive = DriveModel::CoRotating;
  std::optional<double> gradient_V_m2;
  std::optional<double> Omega_rad_s;
  std::optional<double> b_rad_s;
  std::optional<double> A_rad_s;
  bool operator==(const ScenarioConfig&) const = default;
};

struct ScanConfig {
  double omega_min = 0.0;
  double omega_max = 0.0;
  int points = 0;
  bool operator==(const ScanConfig&) const = default;
};

enum class OutputFormat { Csv, Json };

struct OutputConfig {
  std::optional<std::string> path;
  OutputFormat format = OutputFormat::Csv;
  bool operator==(const OutputConfig&) const = default;
};

struct OracleConfig {
  bool enabled = false;
  double tolerance = 1e-9;
  bool operator==(const OracleConfig&) const = default;
};

struct RunConfig {
  std::optional<BeamConfig> beam;
  std::optional<RingConfig> ring;
  std::optional<ScenarioConfig> scenario;
  std::optional<ScanConfig> scan;
  std::optional<OutputConfig> output;
  std::optional<OracleConfig> oracle;
  bool operator==(const RunConfig&) const = default;
};

std::string to_string(OutputFormat format);
OutputFormat parse_format(const std::string& text);

// Throws ConfigError; messages name the offending key and, when the key can be
// located in the text, its line.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

nlohmann::json config_to_json(const RunConfig& config);
std::string serialize_config(const RunConfig& config);

// Section checks used by the commands. Throw ConfigError.
const BeamConfig& require_beam(const RunConfig& config);
const RingConfig& require_ring(const RunConfig& config);
const ScenarioConfig& require_scenario(const RunConfig& config);
const ScanConfig& require_scan(const RunConfig& config);

}  // namespace oamsim
