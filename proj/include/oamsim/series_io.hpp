#pragma once

// Serialization of polarization series.
//
// CSV layout: header `t,P_rho,P_phi,P_z,P_rr,P_pp,P_zz,P_rp,P_rz,P_pz,source`,
// one row per grid point, 17 significant digits, "nan" for components a
// closed form does not provide. Several series may share one file; the source
// column tells them apart.

#include "oamsim/dynamics.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace oamsim {

inline constexpr const char* kSeriesCsvHeader = "t,P_rho,P_phi,P_z,P_rr,P_pp,P_zz,P_rp,P_rz,P_pz,source";

// printf %.17g, which round-trips every double; "nan" for NaN.
std::string format_double(double value);

void write_series_csv(std::ostream& out, const std::vector<PolarizationSeries>& series);

// Groups rows by source, in order of first appearance. Throws
// std::invalid_argument with the offending line number on malformed input.
std::vector<PolarizationSeries> read_series_csv(std::istream& in);

nlohmann::json series_to_json(const PolarizationSeries& series);

}  // namespace oamsim
