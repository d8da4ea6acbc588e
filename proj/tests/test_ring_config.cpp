#include "oamsim/ring_config.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace oamsim;

namespace {
// Literal CODATA values, kept separate from the library constants.
constexpr double c = 299792458.0;
constexpr double q = 1.602176634e-19;
constexpr double me = 9.1093837015e-31;
constexpr double hbar = 1.054571817e-34;
constexpr double mc2_eV = 510998.95;
}  // namespace

TEST_CASE("kinematics at 300 keV") {
  const Kinematics k = kinematics(300e3);
  CHECK(k.gamma == doctest::Approx(1.0 + 300e3 / mc2_eV).epsilon(1e-14));
  CHECK(k.gamma == doctest::Approx(1.587086).epsilon(1e-6));
  CHECK(k.beta_tilde == doctest::Approx(0.776525).epsilon(1e-5));
  CHECK(k.velocity_m_s == doctest::Approx(k.beta_tilde * c));
  CHECK(k.momentum_SI() == doctest::Approx(k.gamma * me * k.velocity_m_s));
  CHECK(kinematics(0.0).beta_tilde == 0.0);
  CHECK(kinematics(1e-3).beta_tilde == doctest::Approx(std::sqrt(2e-3 / mc2_eV)).epsilon(1e-6));
  CHECK_THROWS_AS(kinematics(-1.0), std::domain_error);
}

TEST_CASE("worked frozen ring: 300 keV, R0 = 0.5 m") {
  const RingSetup s = frozen_setup(300e3, 0.5, 0.5);
  const double g = s.kin.gamma;
  const double B0 = (g * g + 1.0) * std::sqrt(g * g - 1.0) * me * c / (q * 0.5);
  CHECK(s.B0_T == doctest::Approx(B0).epsilon(1e-12));
  CHECK(s.B0_T == doctest::Approx(0.0148).epsilon(0.01));
  CHECK(std::abs(s.E_V_m) == doctest::Approx(2.46e6).epsilon(0.01));
  CHECK(s.E_V_m < 0.0);
  CHECK(s.omega_rad_s == doctest::Approx(4.656e8).epsilon(1e-3));
  CHECK(s.omega_rad_s / (2.0 * M_PI) == doctest::Approx(7.41e7).epsilon(0.01));
  CHECK(frozen_residual(s) < 1e-10);
  CHECK(s.Omega_cylindrical() == doctest::Approx(0.0).epsilon(1e-12).scale(s.omega_rad_s));
}

TEST_CASE("frozen field relation closes on itself") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> T(50e3, 2e6), R(0.1, 5.0), n(0.05, 0.95);
  for (int i = 0; i < 50; ++i) {
    const RingSetup s = frozen_setup(T(rng), R(rng), n(rng));
    CHECK(frozen_residual(s) < 1e-10);
    CHECK(frozen_field_from_electric(s.kin, s.E_V_m) == doctest::Approx(s.B0_T).epsilon(1e-12));
    const RingSetup t = frozen_setup_from_field(s.kin.kinetic_energy_eV, s.B0_T, s.n);
    CHECK(t.R0_m == doctest::Approx(s.R0_m).epsilon(1e-12));
    CHECK(frozen_residual(t) < 1e-10);
  }
  const RingSetup mev = frozen_setup(1e6, 2.0, 0.5);
  CHECK(frozen_residual(mev) < 1e-10);
}

TEST_CASE("Larmor frequency of the intrinsic OAM") {
  const Kinematics k = kinematics(300e3);
  // Pure magnetic field: |e| B / (2 gamma m), counterclockwise for B along +z.
  CHECK(larmor_omega(k, 1.0, 0.0) == doctest::Approx(q / (2.0 * k.gamma * me)).epsilon(1e-12));
  CHECK(larmor_omega(k, 1.0, 0.0) == doctest::Approx(5.54e10).epsilon(2e-3));
  // The electric term alone: e (p x E)_z / (2 gamma^2 m^2 c^2) with (p x E)_z = -p E_r.
  const double E = -1e6;
  const double expected = -q * (-k.momentum_SI() * E) / (2.0 * k.gamma * k.gamma * me * me * c * c);
  CHECK(larmor_omega(k, 0.0, E) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("magnetic ring: cyclotron radius and co-moving precession") {
  const RingSetup s = magnetic_ring(300e3, 0.2, 0.0);
  CHECK(s.E_V_m == 0.0);
  CHECK(s.R0_m == doctest::Approx(s.kin.momentum_SI() / (q * 0.2)).epsilon(1e-12));
  CHECK(s.omega_rad_s == doctest::Approx(q * 0.2 / (s.kin.gamma * me)).epsilon(1e-12));
  CHECK(s.Omega_cylindrical() == doctest::Approx(-q * 0.2 / (2.0 * s.kin.gamma * me)).epsilon(1e-12));
  CHECK_THROWS_AS(magnetic_ring(300e3, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(magnetic_ring(300e3, 0.1, 1.0), std::domain_error);
}

TEST_CASE("setup validation") {
  CHECK_THROWS_AS(frozen_setup(0.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(frozen_setup(300e3, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(frozen_setup(300e3, 0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(frozen_setup(300e3, 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(frozen_setup_from_field(300e3, 0.0, 0.5), std::domain_error);
  RingSetup still;
  CHECK_THROWS_AS(frozen_residual(still), std::domain_error);
}

TEST_CASE("field-index gradients") {
  const RingSetup s = frozen_setup(300e3, 0.5, 0.5);
  const FieldGradients g = field_gradients(s);
  CHECK(g.dBz_dR_T_m == doctest::Approx(-0.5 * s.B0_T / 0.5));
  CHECK(g.dEr_dR_V_m2 == doctest::Approx(-s.kin.beta_tilde * c * 0.5 * s.B0_T / 0.5));
  CHECK(g.dEr_dR_V_m2 == doctest::Approx(-3.4418e6).epsilon(1e-4));
  RingSetup flat = s;
  flat.n = 0.0;
  CHECK(field_gradients(flat).dEr_dR_V_m2 == 0.0);
}

TEST_CASE("Landau geometry") {
  const LandauGeometry g = landau_geometry(1.0, 0, 0);
  CHECK(g.w_m == doctest::Approx(2.0 * std::sqrt(hbar / q)).epsilon(1e-14));
  CHECK(g.w_m == doctest::Approx(5.1e-8).epsilon(0.01));
  CHECK(g.mean_r2 == doctest::Approx(1.3164e-15).epsilon(1e-4));
  const LandauGeometry h = landau_geometry(-4.0, 2, -3);
  CHECK(h.w_m == doctest::Approx(g.w_m / 2.0));
  CHECK(h.mean_r2 == doctest::Approx(0.5 * h.w_m * h.w_m * 8.0));
  CHECK_THROWS_AS(landau_geometry(0.0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(landau_geometry(1.0, -1, 0), std::domain_error);
}
