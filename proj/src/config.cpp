#include "oamsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace oamsim {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& section, const std::string& key, const std::string& what) const {
    std::string where = section.empty() ? key : (key.empty() ? section : section + "." + key);
    const int line = locate(section, key);
    std::string prefix = line > 0 ? "config line " + std::to_string(line) + ": " : "config: ";
    throw ConfigError(prefix + "'" + where + "' " + what);
  }

  void reject_unknown(const json& obj, const std::string& section, const std::set<std::string>& allowed) const {
    for (const auto& item : obj.items()) {
      if (!allowed.count(item.key())) fail(section, item.key(), "is not a recognised key");
    }
  }

  const json* find(const json& obj, const std::string& key) const {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  std::optional<double> optional_number(const json& obj, const std::string& section, const std::string& key) const {
    const json* v = find(obj, key);
    if (!v) return std::nullopt;
    if (!v->is_number()) fail(section, key, "must be a number");
    const double d = v->get<double>();
    if (!std::isfinite(d)) fail(section, key, "must be finite");
    return d;
  }

  double number(const json& obj, const std::string& section, const std::string& key) const {
    auto v = optional_number(obj, section, key);
    if (!v) fail(section, key, "is required");
    return *v;
  }

  double number_or(const json& obj, const std::string& section, const std::string& key, double fallback) const {
    return optional_number(obj, section, key).value_or(fallback);
  }

  int integer(const json& obj, const std::string& section, const std::string& key) const {
    const json* v = find(obj, key);
    if (!v) fail(section, key, "is required");
    if (!v->is_number_integer()) fail(section, key, "must be an integer");
    const auto i = v->get<long long>();
    if (i < -2147483647LL || i > 2147483647LL) fail(section, key, "is out of range");
    return static_cast<int>(i);
  }

  std::optional<std::string> optional_string(const json& obj, const std::string& section,
                                             const std::string& key) const {
    const json* v = find(obj, key);
    if (!v) return std::nullopt;
    if (!v->is_string()) fail(section, key, "must be a string");
    return v->get<std::string>();
  }

  std::string string(const json& obj, const std::string& section, const std::string& key) const {
    auto v = optional_string(obj, section, key);
    if (!v) fail(section, key, "is required");
    return *v;
  }

  template <class Parse>
  auto enumerated(const json& obj, const std::string& section, const std::string& key, Parse parse) const {
    const std::string text = string(obj, section, key);
    try {
      return parse(text);
    } catch (const std::invalid_argument& e) {
      fail(section, key, std::string("has an invalid value: ") + e.what());
    }
  }

 private:
  // 1-based line of the key inside its section, or 0 when it cannot be found.
  int locate(const std::string& section, const std::string& key) const {
    std::size_t pos = 0;
    if (!section.empty()) {
      pos = text_.find("\"" + section + "\"");
      if (pos == std::string::npos) return 0;
    }
    if (!key.empty()) {
      const std::size_t k = text_.find("\"" + key + "\"", pos);
      if (k == std::string::npos) return 0;
      pos = k;
    }
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
  }

  const std::string& text_;
};

const json* section_of(const Reader& r, const json& root, const std::string& name) {
  const json* s = r.find(root, name);
  if (s && !s->is_object()) r.fail(name, "", "must be an object");
  return s;
}

BeamConfig parse_beam(const Reader& r, const json& obj) {
  const std::string s = "beam";
  r.reject_unknown(obj, s, {"kinetic_energy_eV", "L", "theta", "psi", "kind", "Qs_e_m2"});
  BeamConfig b;
  b.kinetic_energy_eV = r.number(obj, s, "kinetic_energy_eV");
  if (!(b.kinetic_energy_eV > 0.0)) r.fail(s, "kinetic_energy_eV", "must be positive");
  b.L = r.integer(obj, s, "L");
  if (b.L < 1) r.fail(s, "L", "must be >= 1");
  b.theta = r.number_or(obj, s, "theta", 0.0);
  b.psi = r.number_or(obj, s, "psi", 0.0);
  b.kind = obj.contains("kind") ? r.enumerated(obj, s, "kind", parse_kind) : PolarizationKind::Vector;
  b.Qs_e_m2 = r.optional_number(obj, s, "Qs_e_m2");
  return b;
}

RingConfig parse_ring(const Reader& r, const json& obj) {
  const std::string s = "ring";
  r.reject_unknown(obj, s, {"R0_m", "B0_T", "n"});
  RingConfig g;
  g.R0_m = r.optional_number(obj, s, "R0_m");
  g.B0_T = r.optional_number(obj, s, "B0_T");
  if (g.R0_m.has_value() == g.B0_T.has_value()) r.fail(s, "", "needs exactly one of R0_m and B0_T");
  if (g.R0_m && !(*g.R0_m > 0.0)) r.fail(s, "R0_m", "must be positive");
  if (g.B0_T && !(*g.B0_T > 0.0)) r.fail(s, "B0_T", "must be positive");
  g.n = r.number(obj, s, "n");
  if (!(g.n >= 0.0 && g.n < 1.0)) r.fail(s, "n", "must satisfy 0 <= n < 1");
  return g;
}

ScenarioConfig parse_scenario(const Reader& r, const json& obj) {
  const std::string s = "scenario";
  r.reject_unknown(obj, s, {"mode", "t_end_s", "steps", "omega_drive", "phi", "drive", "gradient_V_m2",
                            "Omega_rad_s", "b_rad_s", "A_rad_s"});
  ScenarioConfig c;
  c.mode = r.enumerated(obj, s, "mode", parse_mode);
  c.t_end_s = r.number(obj, s, "t_end_s");
  if (!(c.t_end_s > 0.0)) r.fail(s, "t_end_s", "must be positive");
  c.steps = r.integer(obj, s, "steps");
  if (c.steps < 2) r.fail(s, "steps", "must be >= 2");
  c.omega_drive = r.number_or(obj, s, "omega_drive", 0.0);
  c.phi = r.number_or(obj, s, "phi", 0.0);
  c.drive = obj.contains("drive") ? r.enumerated(obj, s, "drive", parse_drive) : DriveModel::CoRotating;
  c.gradient_V_m2 = r.optional_number(obj, s, "gradient_V_m2");
  c.Omega_rad_s = r.optional_number(obj, s, "Omega_rad_s");
  c.b_rad_s = r.optional_number(obj, s, "b_rad_s");
  c.A_rad_s = r.optional_number(obj, s, "A_rad_s");
  if (c.mode == Mode::Resonance && !c.A_rad_s && !c.gradient_V_m2) {
    r.fail(s, "", "in resonance mode needs gradient_V_m2 or A_rad_s");
  }
  return c;
}

ScanConfig parse_scan(const Reader& r, const json& obj) {
  const std::string s = "scan";
  r.reject_unknown(obj, s, {"omega_min", "omega_max", "points"});
  ScanConfig c;
  c.omega_min = r.number(obj, s, "omega_min");
  c.omega_max = r.number(obj, s, "omega_max");
  c.points = r.integer(obj, s, "points");
  if (c.points < 1) r.fail(s, "points", "must be >= 1 (empty frequency grid)");
  if (c.points > 1 && !(c.omega_max > c.omega_min)) r.fail(s, "omega_max", "must exceed omega_min");
  return c;
}

OutputConfig parse_output(const Reader& r, const json& obj) {
  const std::string s = "output";
  r.reject_unknown(obj, s, {"path", "format"});
  OutputConfig c;
  c.path = r.optional_string(obj, s, "path");
  c.format = obj.contains("format") ? r.enumerated(obj, s, "format", parse_format) : OutputFormat::Csv;
  return c;
}

OracleConfig parse_oracle(const Reader& r, const json& obj) {
  const std::string s = "oracle";
  r.reject_unknown(obj, s, {"enabled", "tolerance"});
  OracleConfig c;
  if (const json* e = r.find(obj, "enabled")) {
    if (!e->is_boolean()) r.fail(s, "enabled", "must be true or false");
    c.enabled = e->get<bool>();
  }
  c.tolerance = r.number_or(obj, s, "tolerance", c.tolerance);
  if (!(c.tolerance > 0.0)) r.fail(s, "tolerance", "must be positive");
  return c;
}

template <class T>
void put_optional(json& obj, const char* key, const std::optional<T>& v) {
  if (v) obj[key] = *v;
}

}  // namespace

std::string to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv or json)");
}

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  const Reader r(text);
  if (!root.is_object()) throw ConfigError("config: top level must be a JSON object");
  r.reject_unknown(root, "", {"beam", "ring", "scenario", "scan", "output", "oracle"});

  RunConfig c;
  if (const json* s = section_of(r, root, "beam")) c.beam = parse_beam(r, *s);
  if (const json* s = section_of(r, root, "ring")) c.ring = parse_ring(r, *s);
  if (const json* s = section_of(r, root, "scenario")) c.scenario = parse_scenario(r, *s);
  if (const json* s = section_of(r, root, "scan")) c.scan = parse_scan(r, *s);
  if (const json* s = section_of(r, root, "output")) c.output = parse_output(r, *s);
  if (const json* s = section_of(r, root, "oracle")) c.oracle = parse_oracle(r, *s);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

json config_to_json(const RunConfig& c) {
  json root = json::object();
  if (c.beam) {
    const auto& b = *c.beam;
    json& o = root["beam"];
    o = {{"kinetic_energy_eV", b.kinetic_energy_eV}, {"L", b.L},          {"theta", b.theta},
         {"psi", b.psi},                             {"kind", to_string(b.kind)}};
    put_optional(o, "Qs_e_m2", b.Qs_e_m2);
  }
  if (c.ring) {
    json& o = root["ring"];
    o = {{"n", c.ring->n}};
    put_optional(o, "R0_m", c.ring->R0_m);
    put_optional(o, "B0_T", c.ring->B0_T);
  }
  if (c.scenario) {
    const auto& s = *c.scenario;
    json& o = root["scenario"];
    o = {{"mode", to_string(s.mode)}, {"t_end_s", s.t_end_s}, {"steps", s.steps},
         {"omega_drive", s.omega_drive}, {"phi", s.phi}, {"drive", to_string(s.drive)}};
    put_optional(o, "gradient_V_m2", s.gradient_V_m2);
    put_optional(o, "Omega_rad_s", s.Omega_rad_s);
    put_optional(o, "b_rad_s", s.b_rad_s);
    put_optional(o, "A_rad_s", s.A_rad_s);
  }
  if (c.scan) {
    root["scan"] = {{"omega_min", c.scan->omega_min}, {"omega_max", c.scan->omega_max}, {"points", c.scan->points}};
  }
  if (c.output) {
    json& o = root["output"];
    o = {{"format", to_string(c.output->format)}};
    put_optional(o, "path", c.output->path);
  }
  if (c.oracle) {
    root["oracle"] = {{"enabled", c.oracle->enabled}, {"tolerance", c.oracle->tolerance}};
  }
  return root;
}

std::string serialize_config(const RunConfig& config) { return config_to_json(config).dump(2) + "\n"; }

const BeamConfig& require_beam(const RunConfig& config) {
  if (!config.beam) throw ConfigError("config: section 'beam' is required for this command");
  return *config.beam;
}

const RingConfig& require_ring(const RunConfig& config) {
  if (!config.ring) throw ConfigError("config: section 'ring' is required for this command");
  return *config.ring;
}

const ScenarioConfig& require_scenario(const RunConfig& config) {
  if (!config.scenario) throw ConfigError("config: section 'scenario' is required for this command");
  return *config.scenario;
}

const ScanConfig& require_scan(const RunConfig& config) {
  if (!config.scan) throw ConfigError("config: section 'scan' is required for this command");
  return *config.scan;
}

}  // namespace oamsim
