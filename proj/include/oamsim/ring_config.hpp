#pragma once

// Relativistic kinematics, frozen-OAM ring fields, Larmor precession of the
// intrinsic OAM, field-index gradients and Landau-state geometry.
//
// Sign conventions: z is vertical, electrons circulate counterclockwise seen
// from +z (orbital angular velocity omega > 0), B0 > 0 points along +z and the
// radial electric field E_r is signed (negative points toward the centre).
// The electron charge is e = -|e| everywhere.

namespace oamsim {

struct Kinematics {
  double kinetic_energy_eV = 0.0;
  double gamma = 1.0;
  double beta_tilde = 0.0;
  double velocity_m_s = 0.0;

  double momentum_SI() const;  // gamma m_e v, kg m/s
};

// Throws std::domain_error for negative kinetic energy.
Kinematics kinematics(double kinetic_energy_eV);

struct RingSetup {
  Kinematics kin;
  double B0_T = 0.0;          // average vertical field
  double E_V_m = 0.0;         // radial electric field, signed
  double R0_m = 0.0;
  double n = 0.0;             // field index
  double omega_rad_s = 0.0;   // orbital angular velocity
  double Omega_rad_s = 0.0;   // Larmor angular velocity of the intrinsic OAM (z)

  // Larmor precession seen from the co-moving cylindrical frame.
  double Omega_cylindrical() const { return Omega_rad_s - omega_rad_s; }
};

// Solves the frozen-OAM conditions for the given beam energy and radius:
// B0 from the ring-radius relation, then E from the freezing condition.
// Requires kinetic energy > 0, R0 > 0 and 0 < n < 1.
RingSetup frozen_setup(double kinetic_energy_eV, double R0_m, double n);

// Same, parametrised by the average magnetic field instead of the radius.
RingSetup frozen_setup_from_field(double kinetic_energy_eV, double B0_T, double n);

// Purely magnetic ring (E = 0): R0 is the cyclotron radius for B0. 0 <= n < 1.
RingSetup magnetic_ring(double kinetic_energy_eV, double B0_T, double n);

// z-component of the Larmor angular velocity for a centroid moving
// azimuthally through a vertical B and a radial E:
//   Omega_z = -e B / (2 gamma m) + e (p x E)_z / (2 gamma^2 m^2 c^2).
// The factor 1/2 comes from the anticommutators {1/eps, B} and
// (1/eps^2) pi' x E - E x pi' (1/eps^2).
double larmor_omega(const Kinematics& kin, double B_T, double E_V_m);

// Right-hand side of the freezing relation, B0 = (2/beta^2 - 1) beta E / c,
// evaluated with |E|.
double frozen_field_from_electric(const Kinematics& kin, double E_V_m);

struct FieldGradients {
  double dBz_dR_T_m = 0.0;
  double dEr_dR_V_m2 = 0.0;  // quasielectric field E_r = beta c B_z
};

FieldGradients field_gradients(const RingSetup& setup);

struct LandauGeometry {
  double B_T = 0.0;
  double w_m = 0.0;      // beam waist
  double mean_r2 = 0.0;  // <r^2>, m^2
  int n_r = 0;
  int l_z = 0;
};

// Throws std::domain_error for B = 0 or n_r < 0.
LandauGeometry landau_geometry(double B_T, int n_r, int l_z);

// |Omega - omega| / |omega|. Throws std::domain_error when omega = 0.
double frozen_residual(const RingSetup& setup);

}  // namespace oamsim
