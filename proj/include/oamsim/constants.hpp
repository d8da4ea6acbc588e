#pragma once

// CODATA-2018 constants and the SI <-> natural-unit boundary.
//
// Public interfaces take and return SI quantities. Inside the dynamics
// pipeline hbar = 1, so energies travel as angular frequencies (rad/s).

#include <numbers>

namespace oamsim::constants {

inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C, |e|
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kElectronMass = 9.1093837015e-31;     // kg
inline constexpr double kElectronRestEnergyEv = 510998.95;    // eV
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // N/A^2

// Electron charge in units of |e|: e = -|e|.
inline constexpr double kElectronChargeSign = -1.0;

inline constexpr double kPi = std::numbers::pi;

// hbar / (m_e c), metres.
inline constexpr double kReducedCompton = kHbar / (kElectronMass * kSpeedOfLight);

}  // namespace oamsim::constants

namespace oamsim::units {

inline constexpr double kFemtometre = 1e-15;
inline constexpr double kCubicFemtometre = kFemtometre * kFemtometre * kFemtometre;

constexpr double joule_to_rad_per_s(double energy_J) { return energy_J / constants::kHbar; }
constexpr double rad_per_s_to_joule(double omega) { return omega * constants::kHbar; }

constexpr double ev_to_rad_per_s(double energy_eV) {
  return energy_eV * constants::kElementaryCharge / constants::kHbar;
}
constexpr double rad_per_s_to_ev(double omega) {
  return omega * constants::kHbar / constants::kElementaryCharge;
}

constexpr double m3_to_fm3(double volume_m3) { return volume_m3 / kCubicFemtometre; }
constexpr double fm3_to_m3(double volume_fm3) { return volume_fm3 * kCubicFemtometre; }

}  // namespace oamsim::units
