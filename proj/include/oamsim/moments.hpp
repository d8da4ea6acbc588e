#pragma once

// Electromagnetic moments of a twisted electron: tensor magnetic
// polarizability, intrinsic and spectroscopic electric quadrupole moments,
// the quadrupole tensor operator, the current quadrupole moment generated by
// the orbiting spin magnetic moment, and two order-of-magnitude estimates.
//
// Quadrupole moments are signed and expressed in units of |e| m^2; with
// e = -|e| the intrinsic moment of an electron is positive.

#include "oamsim/am_core.hpp"
#include "oamsim/ring_config.hpp"

#include <Eigen/Dense>

#include <array>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace oamsim {

// e^2 hbar^2 / (8 m^3) with Gaussian e^2 = alpha hbar c, in fm^3.
double tmp_polarizability_fm3(double mass_kg);
double tmp_electron_fm3();

// Rest-frame tensor interaction -beta_T (L B cos(angle))^2 as an angular
// frequency. The Dirac beta factor is dropped (upper FW spinor only).
double tmp_energy_shift(double beta_T_fm3, int L, double B_T, double angle);

// b = -beta_T B^2 in rad/s; the coefficient of L_z^2 in the dynamics.
double tmp_coefficient(double beta_T_fm3, double B_T);

/// Sampled radial charge density rho(r) on a strictly increasing grid.
struct RadialDensity {
  std::vector<double> r_m;
  std::vector<double> value;
};

// Two-column text: radius in metres, density >= 0; '#' starts a comment line.
RadialDensity read_radial_density(std::istream& in);
RadialDensity load_radial_density(const std::filesystem::path& path);

// Composite Simpson rule on a (possibly non-uniform) grid; a trailing odd
// interval is closed with the matching three-point correction.
double simpson(const std::vector<double>& x, const std::vector<double>& f);

// <r^2> = int rho r^3 dr / int rho r dr.
double mean_square_radius(const RadialDensity& density);

// Q0 = -e <r^2>. Throws std::domain_error for a zero-norm density.
double intrinsic_eqm(const RadialDensity& density);
double intrinsic_eqm(const LandauGeometry& geometry);

// Qs = (3K^2 - j(j+1)) / ((j+1)(2j+3)) Q0. Requires j >= 1/2 and |K| <= j.
double spectroscopic_eqm(double Q0, double j, double K);

/// The six independent Cartesian components of the quadrupole operator
///   Q_ij = 3 Qs / (2j(2j-1)) [ {j_i, j_j} - (2/3) delta_ij j(j+1) ].
struct QuadrupoleOperator {
  std::array<CMatrix, 6> components;  // xx, yy, zz, xy, xz, yz

  const CMatrix& operator()(int i, int j) const;
  CMatrix ij_trace() const;
};

// Throws std::domain_error for j < 1.
QuadrupoleOperator quadrupole_tensor_operator(const AmOperators& ops, double Qs);

// Current quadrupole tensor of an orbiting magnetic moment mu = e s / eps,
//   Q_ij = -(1/(2 eps)) [3 L_i mu_j + 3 L_j mu_i - 2 delta_ij (L . mu)],
// with L, s in units of hbar and eps the total energy. The result is in units
// of |e| (hbar / (m_e c))^2.
Eigen::Matrix3d ecqm(const Eigen::Vector3d& L, const Eigen::Vector3d& s, double epsilon_eV);

// Order-of-magnitude spin-precession correction L |dE_i/dX_j|_max 1e-10 s^-1,
// gradient in V/m^2. An estimate only.
double delta_omega_estimate(int L, double grad_E_V_m2);

// Vortex-beam diameter model: 10 nm at L = 50, proportional to L.
double beam_diameter_model_m(int L);

// <r^2> / R0 with <r^2> = (d(L)/2)^2, i.e. Qs / (|e| R0) for Qs ~ Q0.
// An order-of-magnitude estimate.
double eqm_scale_check(int L, double R0_m);

struct MomentSet {
  double beta_T_fm3 = 0.0;
  double w_m = 0.0;
  double mean_r2_m2 = 0.0;
  double Q0_e_m2 = 0.0;
  double Qs_e_m2 = 0.0;
};

// Moments of a beam with intrinsic OAM L: the diameter model supplies <r^2>,
// Qs is the stretched-state projection with j = K = L + 1/2, and w_m is the
// Landau waist at the given field.
MomentSet beam_moments(int L, double B_T);

}  // namespace oamsim
