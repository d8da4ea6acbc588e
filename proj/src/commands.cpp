#include "oamsim/commands.hpp"

#include "oamsim/constants.hpp"
#include "oamsim/moments.hpp"
#include "oamsim/ring_config.hpp"
#include "oamsim/series_io.hpp"

#include <cmath>
#include <fstream>

namespace oamsim {

using nlohmann::json;

namespace {

json quantity(const std::string& name, double value, const std::string& unit) {
  return {{"name", name}, {"value", value}, {"unit", unit}};
}

json referenced(const std::string& name, double value, const std::string& unit, double reference) {
  json q = quantity(name, value, unit);
  q["reference"] = reference;
  q["relative_deviation"] = std::abs(value - reference) / std::abs(reference);
  return q;
}

json estimate(const std::string& name, double value, const std::string& unit) {
  json q = quantity(name, value, unit);
  q["note"] = "order-of-magnitude estimate";
  return q;
}

// m^2 c^2 / (hbar |e|): the electron mass squared expressed as a field.
double mass_squared_tesla() {
  using namespace constants;
  return kElectronMass * kElectronMass * kSpeedOfLight * kSpeedOfLight / (kHbar * kElementaryCharge);
}

RingSetup frozen_ring_from(const BeamConfig& beam, const RingConfig& ring) {
  return ring.R0_m ? frozen_setup(beam.kinetic_energy_eV, *ring.R0_m, ring.n)
                   : frozen_setup_from_field(beam.kinetic_energy_eV, *ring.B0_T, ring.n);
}

RingSetup magnetic_ring_from(const BeamConfig& beam, const RingConfig& ring) {
  if (ring.B0_T) return magnetic_ring(beam.kinetic_energy_eV, *ring.B0_T, ring.n);
  const Kinematics kin = kinematics(beam.kinetic_energy_eV);
  const double B0 = kin.momentum_SI() / (constants::kElementaryCharge * *ring.R0_m);
  return magnetic_ring(beam.kinetic_energy_eV, B0, ring.n);
}

json setup_json(const RingSetup& s) {
  return {{"kinetic_energy_eV", s.kin.kinetic_energy_eV},
          {"gamma", s.kin.gamma},
          {"beta", s.kin.beta_tilde},
          {"B0_T", s.B0_T},
          {"E_V_m", s.E_V_m},
          {"R0_m", s.R0_m},
          {"n", s.n},
          {"omega_rad_s", s.omega_rad_s},
          {"Omega_rad_s", s.Omega_rad_s},
          {"Omega_cylindrical_rad_s", s.Omega_cylindrical()}};
}

json scenario_json(const DynamicsScenario& s) {
  return {{"mode", to_string(s.mode)},   {"L", s.L},
          {"Omega_rad_s", s.Omega},      {"b_rad_s", s.b},
          {"A_rad_s", s.A},              {"omega_drive", s.omega_drive},
          {"phi", s.phi},                {"theta", s.theta},
          {"psi", s.psi},                {"kind", to_string(s.kind)},
          {"t_end_s", s.t_end},          {"steps", s.steps},
          {"drive", to_string(s.drive)}};
}

json diagnostics_json(const OracleDiagnostics& d) {
  return {{"halvings", d.halvings},
          {"substeps_per_interval", d.substeps_per_interval},
          {"final_change", d.final_change},
          {"max_trace_error", d.max_trace_error},
          {"max_hermiticity_error", d.max_hermiticity_error},
          {"min_eigenvalue", d.min_eigenvalue},
          {"max_norm_error", d.max_norm_error}};
}

json nan_to_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json comparison_json(const ComparisonReport& r) {
  return {{"mode", to_string(r.mode)},
          {"L", r.L},
          {"observable", r.observable},
          {"amplitude_compared", r.amplitude_compared},
          {"max_deviation", nan_to_null(r.max_deviation)},
          {"amplitude_tolerance", nan_to_null(r.amplitude_tolerance)},
          {"frequency_expected", r.frequency_expected},
          {"frequency_oracle", r.frequency_oracle},
          {"frequency_closed", r.frequency_closed},
          {"frequency_mismatch", r.frequency_mismatch},
          {"amplitude_factor", nan_to_null(r.amplitude_factor)},
          {"oracle", diagnostics_json(r.oracle)}};
}

double beam_Qs(const BeamConfig& beam, double field_T) {
  return beam.Qs_e_m2 ? *beam.Qs_e_m2 : beam_moments(beam.L, field_T).Qs_e_m2;
}

json error_json(const std::string& kind, const std::string& message, int code) {
  return {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

json constants_report() {
  const double beta = tmp_electron_fm3();
  const double compton = constants::kReducedCompton;
  const double m2 = mass_squared_tesla();
  const double w = landau_geometry(1.0, 0, 0).w_m;
  json q = json::array();
  q.push_back(referenced("beta_T", beta, "fm^3", 5.25e4));
  q.push_back(referenced("reduced_compton_wavelength", compton, "m", 3.86e-13));
  q.push_back(referenced("electron_mass_squared", m2, "|e| T (hbar = c = 1)", 4.41e9));
  q.push_back(referenced("w_m_at_1T", w, "m", 5.1e-8));
  return {{"command", "constants"}, {"quantities", q}};
}

json freeze_report(const RunConfig& config) {
  const BeamConfig& beam = require_beam(config);
  const RingConfig& ring = require_ring(config);
  const RingSetup s = frozen_ring_from(beam, ring);
  const FieldGradients g = field_gradients(s);
  const double B_check = frozen_field_from_electric(s.kin, s.E_V_m);
  json q = json::array();
  q.push_back(quantity("kinetic_energy", s.kin.kinetic_energy_eV, "eV"));
  q.push_back(quantity("gamma", s.kin.gamma, "1"));
  q.push_back(quantity("beta", s.kin.beta_tilde, "1"));
  q.push_back(quantity("B0", s.B0_T, "T"));
  q.push_back(quantity("E_r", s.E_V_m, "V/m"));
  q.push_back(quantity("R0", s.R0_m, "m"));
  q.push_back(quantity("n", s.n, "1"));
  q.push_back(quantity("omega", s.omega_rad_s, "rad/s"));
  q.push_back(quantity("revolution_frequency", s.omega_rad_s / (2.0 * constants::kPi), "Hz"));
  q.push_back(quantity("Omega", s.Omega_rad_s, "rad/s"));
  q.push_back(quantity("frozen_residual", frozen_residual(s), "1"));
  q.push_back(quantity("field_relation_residual", std::abs(B_check - s.B0_T) / s.B0_T, "1"));
  q.push_back(quantity("dBz_dR", g.dBz_dR_T_m, "T/m"));
  q.push_back(quantity("dEr_dR", g.dEr_dR_V_m2, "V/m^2"));
  return {{"command", "freeze"}, {"setup", setup_json(s)}, {"quantities", q}};
}

json moments_report(const RunConfig& config) {
  const BeamConfig& beam = require_beam(config);
  const RingConfig& ring = require_ring(config);
  const RingSetup s = frozen_ring_from(beam, ring);
  const MomentSet m = beam_moments(beam.L, s.B0_T);
  const double Qs = beam.Qs_e_m2.value_or(m.Qs_e_m2);
  const double eps = s.kin.gamma * constants::kElectronRestEnergyEv;
  const Eigen::Matrix3d ecqm_tensor = ecqm({0.0, 0.0, double(beam.L)}, {0.0, 0.0, 0.5}, eps);
  const double lc2 = constants::kReducedCompton * constants::kReducedCompton;
  const double dEr = field_gradients(s).dEr_dR_V_m2;
  const double A = quadrupole_coefficient_frozen(Qs, beam.L, s);
  const double cyclic = frozen_cyclic_rate(A, beam.L);

  json q = json::array();
  q.push_back(quantity("beta_T", m.beta_T_fm3, "fm^3"));
  q.push_back(quantity("w_m", m.w_m, "m"));
  q.push_back(quantity("beam_diameter", beam_diameter_model_m(beam.L), "m"));
  q.push_back(quantity("mean_r2", m.mean_r2_m2, "m^2"));
  q.push_back(quantity("Q0", m.Q0_e_m2, "|e| m^2"));
  q.push_back(quantity("Qs", Qs, "|e| m^2"));
  q.push_back(quantity("ecqm_zz", ecqm_tensor(2, 2) * lc2, "|e| m^2"));
  q.push_back(quantity("Qs_over_eR0", Qs / s.R0_m, "m"));
  q.push_back(quantity("Qs_over_eR0_per_compton", Qs / s.R0_m / constants::kReducedCompton, "1"));
  q.push_back(estimate("eqm_scale_check", eqm_scale_check(beam.L, s.R0_m), "m"));
  q.push_back(estimate("delta_Omega", delta_omega_estimate(beam.L, dEr), "1/s"));
  q.push_back(quantity("A_frozen", A, "rad/s"));
  q.push_back(quantity("frozen_cyclic_rate", cyclic, "rad/s"));
  q.push_back(quantity("log10_omega_over_cyclic_rate", std::log10(s.omega_rad_s / cyclic), "1"));
  return {{"command", "moments"}, {"setup", setup_json(s)}, {"quantities", q}};
}

ResolvedScenario resolve_scenario(const RunConfig& config) {
  const BeamConfig& beam = require_beam(config);
  const ScenarioConfig& sc = require_scenario(config);
  ResolvedScenario out;
  DynamicsScenario& scn = out.scenario;
  scn.mode = sc.mode;
  scn.L = beam.L;
  scn.theta = beam.theta;
  scn.psi = beam.psi;
  scn.kind = beam.kind;
  scn.t_end = sc.t_end_s;
  scn.steps = sc.steps;
  scn.drive = sc.drive;
  json prov = json::object();

  const bool needs_ring = [&] {
    switch (sc.mode) {
      case Mode::Tmp: return !(sc.Omega_rad_s && sc.b_rad_s);
      case Mode::Frozen: return !sc.A_rad_s;
      case Mode::Resonance: return !(sc.Omega_rad_s && sc.A_rad_s);
    }
    return true;
  }();
  if (needs_ring && !config.ring) {
    throw ConfigError("config: section 'ring' is required unless the scenario overrides every coefficient");
  }

  switch (sc.mode) {
    case Mode::Tmp:
      if (config.ring) {
        const RingSetup s = magnetic_ring_from(beam, *config.ring);
        scn.Omega = s.Omega_cylindrical();
        scn.b = tmp_coefficient(tmp_electron_fm3(), s.B0_T);
        prov["ring"] = setup_json(s);
        prov["Omega"] = "magnetic ring, Larmor minus orbital frequency";
        prov["b"] = "-beta_T B0^2";
      }
      break;
    case Mode::Frozen:
      if (config.ring) {
        const RingSetup s = frozen_ring_from(beam, *config.ring);
        scn.A = quadrupole_coefficient_frozen(beam_Qs(beam, s.B0_T), beam.L, s);
        prov["ring"] = setup_json(s);
        prov["A"] = "frozen ring field-index gradient";
      }
      break;
    case Mode::Resonance:
      if (config.ring) {
        const RingSetup s = magnetic_ring_from(beam, *config.ring);
        scn.Omega = s.Omega_cylindrical();
        prov["ring"] = setup_json(s);
        prov["Omega"] = "magnetic ring, Larmor minus orbital frequency";
        if (sc.gradient_V_m2 && !sc.A_rad_s) {
          scn.A = quadrupole_coefficient_resonance(beam_Qs(beam, s.B0_T), beam.L, *sc.gradient_V_m2);
          prov["A"] = "oscillating gradient amplitude";
        }
      }
      scn.omega_drive = sc.omega_drive;
      scn.phi = sc.phi;
      break;
  }
  if (sc.Omega_rad_s) {
    scn.Omega = *sc.Omega_rad_s;
    prov["Omega"] = "override";
  }
  if (sc.b_rad_s) {
    scn.b = *sc.b_rad_s;
    prov["b"] = "override";
  }
  if (sc.A_rad_s) {
    scn.A = *sc.A_rad_s;
    prov["A"] = "override";
  }
  try {
    scn.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(std::string("config: scenario is inconsistent: ") + e.what());
  }
  out.provenance = prov;
  return out;
}

SimulationResult run_simulation(const RunConfig& config) {
  const ResolvedScenario resolved = resolve_scenario(config);
  const DynamicsScenario& scn = resolved.scenario;
  SimulationResult result;
  result.series.push_back(closed_form(scn));

  const OracleConfig oracle_cfg = config.oracle.value_or(OracleConfig{});
  json report = {{"command", "simulate"},
                 {"scenario", scenario_json(scn)},
                 {"provenance", resolved.provenance},
                 {"oracle_enabled", oracle_cfg.enabled}};
  if (oracle_cfg.enabled) {
    const AmOperators ops = build_operators(scn.L);
    OracleOptions opts;
    opts.tolerance = oracle_cfg.tolerance;
    const OracleRun run = evolve_oracle(scn, ops, opts);
    result.series.push_back(run.series);
    const ComparisonReport cmp = compare_with_closed_form(scn, run, result.series.front());
    result.comparison = cmp;
    const bool pointwise_ok = !cmp.amplitude_compared || cmp.max_deviation <= cmp.amplitude_tolerance;
    const bool linear = scn.mode == Mode::Resonance && scn.drive == DriveModel::Linear;
    const bool frequency_ok = scn.L != 1 || linear || cmp.frequency_mismatch <= 1e-3;
    result.verified = pointwise_ok && frequency_ok;
    report["comparison"] = comparison_json(cmp);
    report["frequency_asserted"] = scn.L == 1 && !linear;
  }
  report["verified"] = result.verified;
  result.report = report;
  return result;
}

ScanResult run_scan(const RunConfig& config, unsigned threads) {
  const ScanConfig& grid_cfg = require_scan(config);
  const ResolvedScenario resolved = resolve_scenario(config);
  const DynamicsScenario& base = resolved.scenario;
  if (base.mode != Mode::Resonance) throw ConfigError("config: scan needs scenario.mode = resonance");

  std::vector<double> grid(static_cast<std::size_t>(grid_cfg.points));
  for (int i = 0; i < grid_cfg.points; ++i) {
    grid[i] = grid_cfg.points == 1
                  ? grid_cfg.omega_min
                  : grid_cfg.omega_min + (grid_cfg.omega_max - grid_cfg.omega_min) * i / (grid_cfg.points - 1);
  }
  ScanOptions opts;
  opts.threads = threads;
  const OracleConfig oracle_cfg = config.oracle.value_or(OracleConfig{});
  opts.use_oracle = oracle_cfg.enabled;
  opts.oracle.tolerance = oracle_cfg.tolerance;

  ScanResult r;
  r.points = resonance_scan(base, grid, opts);
  r.argmax = scan_argmax(r.points);
  r.resonance_omega = 2.0 * base.Omega;
  r.brackets_resonance = grid.front() <= r.resonance_omega && r.resonance_omega <= grid.back();
  json warnings = json::array();
  if (!r.brackets_resonance) warnings.push_back("frequency grid does not bracket 2 Omega");
  r.report = {{"command", "scan"},
              {"scenario", scenario_json(base)},
              {"provenance", resolved.provenance},
              {"resonance_omega", r.resonance_omega},
              {"argmax_omega", r.points[r.argmax].omega},
              {"argmax_peak_abs_Pz", r.points[r.argmax].peak_abs_Pz},
              {"brackets_resonance", r.brackets_resonance},
              {"warnings", warnings}};
  return r;
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
  out << "omega,peak_abs_Pz,peak_abs_Pz_oracle,is_argmax\n";
  for (std::size_t i = 0; i < scan.points.size(); ++i) {
    const auto& p = scan.points[i];
    out << format_double(p.omega) << ',' << format_double(p.peak_abs_Pz) << ','
        << format_double(p.peak_abs_Pz_oracle) << ',' << (i == scan.argmax ? 1 : 0) << '\n';
  }
}

void write_quantities_csv(std::ostream& out, const json& report) {
  out << "name,value,unit,reference,relative_deviation,note\n";
  for (const auto& q : report.at("quantities")) {
    out << csv_cell(q.at("name")) << ',' << csv_cell(q.at("value")) << ',' << csv_cell(q.at("unit")) << ','
        << csv_cell(q.value("reference", json())) << ',' << csv_cell(q.value("relative_deviation", json()))
        << ',' << csv_cell(q.value("note", json())) << '\n';
  }
}

namespace {

int execute(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  const std::string& cmd = options.command;
  const bool needs_config = cmd == "freeze" || cmd == "moments" || cmd == "simulate" || cmd == "scan";
  RunConfig config;
  if (options.config_path) {
    config = load_config(*options.config_path);
  } else if (needs_config) {
    throw ConfigError("config: command '" + cmd + "' needs --config PATH");
  }

  const bool series_command = cmd == "simulate" || cmd == "scan";
  const OutputFormat default_format = series_command ? OutputFormat::Csv : OutputFormat::Json;
  const OutputFormat format =
      options.format.value_or(config.output ? config.output->format : default_format);
  std::optional<std::string> out_path = options.out_path;
  if (!out_path && config.output) out_path = config.output->path;

  std::ofstream file;
  if (out_path) {
    file.open(*out_path);
    if (!file) throw std::runtime_error("cannot open output file " + *out_path);
  }
  std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;

  auto emit_report = [&](const json& report) {
    if (format == OutputFormat::Json) {
      sink << report.dump(2) << '\n';
    } else {
      write_quantities_csv(sink, report);
    }
  };

  if (cmd == "constants") {
    emit_report(constants_report());
    return 0;
  }
  if (cmd == "freeze") {
    emit_report(freeze_report(config));
    return 0;
  }
  if (cmd == "moments") {
    emit_report(moments_report(config));
    return 0;
  }
  if (cmd == "simulate") {
    const SimulationResult sim = run_simulation(config);
    if (format == OutputFormat::Csv) {
      write_series_csv(sink, sim.series);
    } else {
      json series = json::array();
      for (const auto& s : sim.series) series.push_back(series_to_json(s));
      sink << json{{"series", series}, {"report", sim.report}}.dump(2) << '\n';
    }
    if (out_path) {
      std::ofstream report_file(*out_path + ".report.json");
      if (!report_file) throw std::runtime_error("cannot open report file " + *out_path + ".report.json");
      report_file << sim.report.dump(2) << '\n';
    }
    if (!sim.verified) {
      err << error_json("verification", "oracle and closed form disagree beyond tolerance", 1).dump() << '\n';
      return 1;
    }
    return 0;
  }
  if (cmd == "scan") {
    const ScanResult scan = run_scan(config, options.threads);
    if (format == OutputFormat::Csv) {
      write_scan_csv(sink, scan);
    } else {
      json rows = json::array();
      for (std::size_t i = 0; i < scan.points.size(); ++i) {
        rows.push_back({{"omega", scan.points[i].omega},
                        {"peak_abs_Pz", scan.points[i].peak_abs_Pz},
                        {"peak_abs_Pz_oracle", nan_to_null(scan.points[i].peak_abs_Pz_oracle)},
                        {"is_argmax", i == scan.argmax}});
      }
      sink << json{{"points", rows}, {"report", scan.report}}.dump(2) << '\n';
    }
    for (const auto& w : scan.report.at("warnings")) err << json{{"warning", w}}.dump() << '\n';
    return 0;
  }
  if (cmd == "verify") {
    std::vector<CriterionResult> results;
    bool all = true;
    json failed = json::array();
    for (int id = 1; id <= kCriterionCount; ++id) {
      results.push_back(run_criterion(id, options.hooks));
      all = all && results.back().passed;
      if (!results.back().passed) failed.push_back({{"id", id}, {"name", results.back().name}, {"detail", results.back().detail}});
      if (format == OutputFormat::Csv) sink << format_result_line(results.back()) << '\n' << std::flush;
    }
    const json recorded = recorded_observations();
    if (format == OutputFormat::Json) {
      json criteria = json::array();
      for (const auto& r : results) criteria.push_back(to_json(r));
      sink << json{{"passed", all}, {"criteria", criteria}, {"recorded_not_asserted", recorded}}.dump(2) << '\n';
    } else {
      for (const auto& r : recorded) sink << "recorded (not asserted): " << r.dump() << '\n';
    }
    if (!all) {
      json e = error_json("verification", std::to_string(failed.size()) + " acceptance check(s) failed", 1);
      e["error"]["failed"] = failed;
      err << e.dump() << '\n';
      return 1;
    }
    return 0;
  }
  throw ConfigError("unknown command '" + cmd + "'");
}

}  // namespace

int run_command(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  try {
    return execute(options, out, err);
  } catch (const ConfigError& e) {
    err << error_json("config", e.what(), 2).dump() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    err << error_json("numerical", e.what(), 1).dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << error_json("config", e.what(), 2).dump() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << error_json("config", e.what(), 2).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << error_json("runtime", e.what(), 1).dump() << '\n';
    return 1;
  }
}

}  // namespace oamsim
