#pragma once

// Command implementations behind the oamsim executable. Each command returns
// its result as data; run_command adds file and stream handling and maps
// failures to exit codes (0 success, 1 verification or numerical failure,
// 2 configuration error).

#include "oamsim/config.hpp"
#include "oamsim/dynamics.hpp"
#include "oamsim/verification.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oamsim {

// Physics reports: {"quantities": [{name, value, unit, ...}], ...}.
nlohmann::json constants_report();
nlohmann::json freeze_report(const RunConfig& config);
nlohmann::json moments_report(const RunConfig& config);

struct ResolvedScenario {
  DynamicsScenario scenario;
  nlohmann::json provenance;  // where each coefficient came from
};

// Builds the dynamics scenario from the beam, ring and scenario sections.
// Coefficients are derived from the ring unless overridden in the scenario.
ResolvedScenario resolve_scenario(const RunConfig& config);

struct SimulationResult {
  std::vector<PolarizationSeries> series;  // closed form, then oracle if enabled
  std::optional<ComparisonReport> comparison;
  bool verified = true;  // false when an asserted oracle comparison fails
  nlohmann::json report;
};

SimulationResult run_simulation(const RunConfig& config);

struct ScanResult {
  std::vector<ScanPoint> points;
  std::size_t argmax = 0;
  double resonance_omega = 0.0;
  bool brackets_resonance = true;
  nlohmann::json report;
};

ScanResult run_scan(const RunConfig& config, unsigned threads);
void write_scan_csv(std::ostream& out, const ScanResult& scan);

// Quantities table as CSV: name,value,unit,reference,relative_deviation,note.
void write_quantities_csv(std::ostream& out, const nlohmann::json& report);

struct CommandOptions {
  std::string command;
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  std::optional<OutputFormat> format;
  unsigned threads = 0;  // scan parallelism, 0 = automatic
  VerificationHooks hooks;
};

// Writes results to `out` (or to the output file) and diagnostics as JSON to
// `err`. Returns the exit code.
int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace oamsim
