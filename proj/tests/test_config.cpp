#include "oamsim/commands.hpp"
#include "oamsim/config.hpp"
#include "oamsim/constants.hpp"
#include "oamsim/moments.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

using namespace oamsim;

namespace {

const char* kFull = R"({
  "beam": {"kinetic_energy_eV": 3e5, "L": 4, "theta": 0.5, "psi": 0.25, "kind": "tensor", "Qs_e_m2": 1e-17},
  "ring": {"B0_T": 0.02, "n": 0.3},
  "scenario": {"mode": "resonance", "t_end_s": 2.5, "steps": 11, "omega_drive": 7.0,
               "phi": 0.1, "drive": "linear", "gradient_V_m2": 1e5},
  "scan": {"omega_min": 1.0, "omega_max": 3.0, "points": 5},
  "output": {"path": "out.csv", "format": "json"},
  "oracle": {"enabled": true, "tolerance": 1e-8}
})";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("full config parses") {
  const RunConfig c = parse_config(kFull);
  REQUIRE(c.beam);
  CHECK(c.beam->L == 4);
  CHECK(c.beam->kind == PolarizationKind::Tensor);
  CHECK(c.beam->Qs_e_m2 == 1e-17);
  CHECK_FALSE(c.ring->R0_m);
  CHECK(c.ring->B0_T == 0.02);
  CHECK(c.scenario->mode == Mode::Resonance);
  CHECK(c.scenario->drive == DriveModel::Linear);
  CHECK(c.scenario->gradient_V_m2 == 1e5);
  CHECK(c.scan->points == 5);
  CHECK(c.output->path == std::string("out.csv"));
  CHECK(c.output->format == OutputFormat::Json);
  CHECK(c.oracle->enabled);
  CHECK(c.oracle->tolerance == 1e-8);
}

TEST_CASE("parse, serialize, parse is the identity") {
  const RunConfig c = parse_config(kFull);
  const std::string text = serialize_config(c);
  CHECK(parse_config(text) == c);
  CHECK(serialize_config(parse_config(text)) == text);
  const RunConfig minimal = parse_config(R"({"beam": {"kinetic_energy_eV": 1e3, "L": 1}})");
  CHECK(parse_config(serialize_config(minimal)) == minimal);
  CHECK_FALSE(minimal.ring);
}

TEST_CASE("config errors name the key and line") {
  const std::string unknown = error_of("{\n  \"beam\": {\"kinetic_energy_eV\": 1,\n    \"Lz\": 3, \"L\": 1}\n}");
  CHECK(unknown.find("beam.Lz") != std::string::npos);
  CHECK(unknown.find("line 3") != std::string::npos);
  CHECK(error_of(R"({"beam": {"L": 1}})").find("kinetic_energy_eV") != std::string::npos);
  CHECK(error_of(R"({"beam": {"kinetic_energy_eV": "fast", "L": 1}})").find("must be a number") !=
        std::string::npos);
  CHECK(error_of(R"({"beam": {"kinetic_energy_eV": 1, "L": 1.5}})").find("integer") != std::string::npos);
  CHECK(error_of(R"({"beam": {"kinetic_energy_eV": 1, "L": 0}})").find("beam.L") != std::string::npos);
  CHECK(error_of(R"({"ring": {"R0_m": 1, "B0_T": 1, "n": 0.5}})").find("exactly one") != std::string::npos);
  CHECK(error_of(R"({"ring": {"R0_m": 1, "n": 1.0}})").find("ring.n") != std::string::npos);
  CHECK(error_of(R"({"scan": {"omega_min": 1, "omega_max": 2, "points": 0}})").find("points") !=
        std::string::npos);
  CHECK(error_of(R"({"scenario": {"mode": "resonance", "t_end_s": 1, "steps": 5}})").find("gradient_V_m2") !=
        std::string::npos);
  CHECK(error_of(R"({"scenario": {"mode": "warp", "t_end_s": 1, "steps": 5}})").find("scenario.mode") !=
        std::string::npos);
  CHECK(error_of(R"({"scenario": {"mode": "tmp", "t_end_s": 1, "steps": 1}})").find("steps") != std::string::npos);
  CHECK(error_of(R"({"oracle": {"enabled": 1}})").find("enabled") != std::string::npos);
  CHECK(error_of(R"({"extra": {}})").find("extra") != std::string::npos);
  CHECK_FALSE(error_of("{ not json").empty());
  CHECK_FALSE(error_of("[1, 2]").empty());
  CHECK_THROWS_AS(load_config("/nonexistent/oamsim.json"), ConfigError);
  CHECK_THROWS_AS(require_scan(parse_config("{}")), ConfigError);
}

TEST_CASE("scenario resolution from the ring") {
  SUBCASE("frozen") {
    const RunConfig c = parse_config(R"({
      "beam": {"kinetic_energy_eV": 3e5, "L": 100, "kind": "tensor"},
      "ring": {"R0_m": 0.5, "n": 0.5},
      "scenario": {"mode": "frozen", "t_end_s": 1, "steps": 3}})");
    const ResolvedScenario r = resolve_scenario(c);
    const RingSetup s = frozen_setup(3e5, 0.5, 0.5);
    CHECK(r.scenario.A ==
          doctest::Approx(quadrupole_coefficient_frozen(beam_moments(100, s.B0_T).Qs_e_m2, 100, s)));
    CHECK(r.scenario.Omega == 0.0);
    CHECK(r.provenance.contains("A"));
  }
  SUBCASE("tmp") {
    const RunConfig c = parse_config(R"({
      "beam": {"kinetic_energy_eV": 3e5, "L": 1},
      "ring": {"B0_T": 0.5, "n": 0.0},
      "scenario": {"mode": "tmp", "t_end_s": 1, "steps": 3}})");
    const ResolvedScenario r = resolve_scenario(c);
    const RingSetup s = magnetic_ring(3e5, 0.5, 0.0);
    CHECK(r.scenario.Omega == doctest::Approx(s.Omega_rad_s - s.omega_rad_s));
    CHECK(r.scenario.Omega < 0.0);
    CHECK(r.scenario.b == doctest::Approx(tmp_coefficient(tmp_electron_fm3(), 0.5)));
  }
  SUBCASE("resonance with overrides") {
    const RunConfig c = parse_config(R"({
      "beam": {"kinetic_energy_eV": 3e5, "L": 2, "Qs_e_m2": 1e-16},
      "ring": {"B0_T": 0.1, "n": 0.0},
      "scenario": {"mode": "resonance", "t_end_s": 1, "steps": 3, "omega_drive": 9, "gradient_V_m2": 2e5,
                   "Omega_rad_s": 4.5}})");
    const ResolvedScenario r = resolve_scenario(c);
    CHECK(r.scenario.Omega == 4.5);
    CHECK(r.scenario.A == doctest::Approx(quadrupole_coefficient_resonance(1e-16, 2, 2e5)));
    CHECK(r.scenario.omega_drive == 9.0);
    CHECK(r.provenance.at("Omega") == "override");
  }
  SUBCASE("missing ring without overrides") {
    const RunConfig c = parse_config(R"({
      "beam": {"kinetic_energy_eV": 3e5, "L": 1},
      "scenario": {"mode": "frozen", "t_end_s": 1, "steps": 3}})");
    CHECK_THROWS_AS(resolve_scenario(c), ConfigError);
  }
  SUBCASE("inconsistent override") {
    const RunConfig c = parse_config(R"({
      "beam": {"kinetic_energy_eV": 3e5, "L": 1},
      "scenario": {"mode": "frozen", "t_end_s": 1, "steps": 3, "A_rad_s": 1, "Omega_rad_s": 2}})");
    CHECK_THROWS_AS(resolve_scenario(c), ConfigError);
  }
}
