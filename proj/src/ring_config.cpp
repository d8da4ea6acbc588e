#include "oamsim/ring_config.hpp"

#include "oamsim/constants.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace oamsim {

using namespace constants;

namespace {

void require_field_index(double n, bool allow_zero) {
  const bool ok = allow_zero ? (n >= 0.0 && n < 1.0) : (n > 0.0 && n < 1.0);
  if (!ok || !std::isfinite(n)) {
    throw std::domain_error(allow_zero ? "field index must satisfy 0 <= n < 1"
                                       : "field index must satisfy 0 < n < 1");
  }
}

// mc/|e| in tesla metres.
constexpr double kMagneticRigidityUnit = kElectronMass * kSpeedOfLight / kElementaryCharge;

RingSetup finish_frozen(const Kinematics& kin, double B0_T, double R0_m, double n) {
  RingSetup s;
  s.kin = kin;
  s.B0_T = B0_T;
  s.R0_m = R0_m;
  s.n = n;
  const double beta = kin.beta_tilde;
  const double E_magnitude = kSpeedOfLight * B0_T / ((2.0 / (beta * beta) - 1.0) * beta);
  // The electric force on the electron points outward, against the magnetic one.
  s.E_V_m = -E_magnitude;
  s.omega_rad_s = kin.velocity_m_s / R0_m;
  s.Omega_rad_s = larmor_omega(kin, s.B0_T, s.E_V_m);
  return s;
}

}  // namespace

double Kinematics::momentum_SI() const {
  return gamma * kElectronMass * velocity_m_s;
}

Kinematics kinematics(double kinetic_energy_eV) {
  if (!(kinetic_energy_eV >= 0.0) || !std::isfinite(kinetic_energy_eV)) {
    throw std::domain_error("kinetic energy must be finite and non-negative");
  }
  Kinematics k;
  k.kinetic_energy_eV = kinetic_energy_eV;
  k.gamma = 1.0 + kinetic_energy_eV / kElectronRestEnergyEv;
  // sqrt(1 - 1/gamma^2) written to avoid cancellation at low energy.
  k.beta_tilde = std::sqrt((k.gamma - 1.0) * (k.gamma + 1.0)) / k.gamma;
  k.velocity_m_s = k.beta_tilde * kSpeedOfLight;
  return k;
}

RingSetup frozen_setup(double kinetic_energy_eV, double R0_m, double n) {
  if (!(kinetic_energy_eV > 0.0)) throw std::domain_error("kinetic energy must be positive");
  if (!(R0_m > 0.0) || !std::isfinite(R0_m)) throw std::domain_error("ring radius must be positive");
  require_field_index(n, false);
  const Kinematics kin = kinematics(kinetic_energy_eV);
  const double g2 = kin.gamma * kin.gamma;
  const double B0 = (g2 + 1.0) * std::sqrt(g2 - 1.0) * kMagneticRigidityUnit / R0_m;
  return finish_frozen(kin, B0, R0_m, n);
}

RingSetup frozen_setup_from_field(double kinetic_energy_eV, double B0_T, double n) {
  if (!(kinetic_energy_eV > 0.0)) throw std::domain_error("kinetic energy must be positive");
  if (!(B0_T > 0.0) || !std::isfinite(B0_T)) throw std::domain_error("B0 must be positive");
  require_field_index(n, false);
  const Kinematics kin = kinematics(kinetic_energy_eV);
  const double g2 = kin.gamma * kin.gamma;
  const double R0 = (g2 + 1.0) * std::sqrt(g2 - 1.0) * kMagneticRigidityUnit / B0_T;
  return finish_frozen(kin, B0_T, R0, n);
}

RingSetup magnetic_ring(double kinetic_energy_eV, double B0_T, double n) {
  if (!(kinetic_energy_eV > 0.0)) throw std::domain_error("kinetic energy must be positive");
  if (!(B0_T > 0.0) || !std::isfinite(B0_T)) throw std::domain_error("B0 must be positive");
  require_field_index(n, true);
  RingSetup s;
  s.kin = kinematics(kinetic_energy_eV);
  s.B0_T = B0_T;
  s.E_V_m = 0.0;
  s.n = n;
  s.R0_m = s.kin.momentum_SI() / (kElementaryCharge * B0_T);
  s.omega_rad_s = s.kin.velocity_m_s / s.R0_m;
  s.Omega_rad_s = larmor_omega(s.kin, B0_T, 0.0);
  return s;
}

double larmor_omega(const Kinematics& kin, double B_T, double E_V_m) {
  const double e = kElectronChargeSign * kElementaryCharge;
  const double m = kElectronMass;
  const double g = kin.gamma;
  // p along +e_phi, E along e_r: (p x E)_z = -p E_r.
  const double p_cross_E = -kin.momentum_SI() * E_V_m;
  return -e * B_T / (2.0 * g * m) +
         e * p_cross_E / (2.0 * g * g * m * m * kSpeedOfLight * kSpeedOfLight);
}

double frozen_field_from_electric(const Kinematics& kin, double E_V_m) {
  const double beta = kin.beta_tilde;
  return (2.0 / (beta * beta) - 1.0) * beta * std::abs(E_V_m) / kSpeedOfLight;
}

FieldGradients field_gradients(const RingSetup& setup) {
  FieldGradients g;
  g.dBz_dR_T_m = -setup.n * setup.B0_T / setup.R0_m;
  g.dEr_dR_V_m2 = setup.kin.beta_tilde * kSpeedOfLight * g.dBz_dR_T_m;
  return g;
}

LandauGeometry landau_geometry(double B_T, int n_r, int l_z) {
  if (B_T == 0.0 || !std::isfinite(B_T)) {
    throw std::domain_error("Landau geometry needs a finite non-zero field");
  }
  if (n_r < 0) throw std::domain_error("radial quantum number must be >= 0");
  LandauGeometry g;
  g.B_T = B_T;
  g.n_r = n_r;
  g.l_z = l_z;
  g.w_m = 2.0 * std::sqrt(kHbar / (kElementaryCharge * std::abs(B_T)));
  g.mean_r2 = 0.5 * g.w_m * g.w_m * (2.0 * n_r + std::abs(l_z) + 1.0);
  return g;
}

double frozen_residual(const RingSetup& setup) {
  if (setup.omega_rad_s == 0.0) throw std::domain_error("orbital angular velocity is zero");
  return std::abs(setup.Omega_rad_s - setup.omega_rad_s) / std::abs(setup.omega_rad_s);
}

}  // namespace oamsim
