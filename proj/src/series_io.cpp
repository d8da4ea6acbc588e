#include "oamsim/series_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oamsim {

namespace {

// Row order of the tensor columns: rr, pp, zz, rp, rz, pz.
constexpr int kTensorIndex[6][2] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}};

double parse_number(const std::string& field, int line) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    throw std::invalid_argument("series CSV line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return v;
}

SeriesSource parse_source(const std::string& text, int line) {
  if (text == "closed_form") return SeriesSource::ClosedForm;
  if (text == "oracle") return SeriesSource::Oracle;
  throw std::invalid_argument("series CSV line " + std::to_string(line) + ": unknown source '" + text + "'");
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_series_csv(std::ostream& out, const std::vector<PolarizationSeries>& series) {
  out << kSeriesCsvHeader << '\n';
  for (const auto& s : series) {
    if (s.times.size() != s.states.size()) throw std::invalid_argument("series length mismatch");
    const std::string source = to_string(s.source);
    for (std::size_t k = 0; k < s.times.size(); ++k) {
      const auto& st = s.states[k];
      out << format_double(s.times[k]);
      for (int i = 0; i < 3; ++i) out << ',' << format_double(st.vector(i));
      for (const auto& ij : kTensorIndex) out << ',' << format_double(st.tensor(ij[0], ij[1]));
      out << ',' << source << '\n';
    }
  }
}

std::vector<PolarizationSeries> read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSeriesCsvHeader) {
    throw std::invalid_argument("series CSV line 1: unexpected header");
  }
  std::vector<PolarizationSeries> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 11) {
      throw std::invalid_argument("series CSV line " + std::to_string(line_no) + ": expected 11 fields");
    }
    const SeriesSource source = parse_source(fields[10], line_no);
    PolarizationSeries* target = nullptr;
    for (auto& s : out) {
      if (s.source == source) target = &s;
    }
    if (!target) {
      out.emplace_back();
      target = &out.back();
      target->source = source;
    }
    PolarizationState st;
    for (int i = 0; i < 3; ++i) st.vector(i) = parse_number(fields[1 + i], line_no);
    for (int c = 0; c < 6; ++c) {
      const double v = parse_number(fields[4 + c], line_no);
      st.tensor(kTensorIndex[c][0], kTensorIndex[c][1]) = v;
      st.tensor(kTensorIndex[c][1], kTensorIndex[c][0]) = v;
    }
    const double t = parse_number(fields[0], line_no);
    if (!target->times.empty() && !(t > target->times.back())) {
      throw std::invalid_argument("series CSV line " + std::to_string(line_no) + ": times must increase");
    }
    target->times.push_back(t);
    target->states.push_back(st);
  }
  return out;
}

nlohmann::json series_to_json(const PolarizationSeries& series) {
  auto column = [](double v) -> nlohmann::json {
    if (std::isnan(v)) return nullptr;
    return v;
  };
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    const auto& st = series.states[k];
    rows.push_back({{"t", series.times[k]},
                    {"P_rho", column(st.vector(0))},
                    {"P_phi", column(st.vector(1))},
                    {"P_z", column(st.vector(2))},
                    {"P_rr", column(st.tensor(0, 0))},
                    {"P_pp", column(st.tensor(1, 1))},
                    {"P_zz", column(st.tensor(2, 2))},
                    {"P_rp", column(st.tensor(0, 1))},
                    {"P_rz", column(st.tensor(0, 2))},
                    {"P_pz", column(st.tensor(1, 2))}});
  }
  return {{"source", to_string(series.source)}, {"rows", rows}};
}

}  // namespace oamsim
