#include "oamsim/constants.hpp"
#include "oamsim/moments.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace oamsim;

namespace {
constexpr double c = 299792458.0;
constexpr double q = 1.602176634e-19;
constexpr double hbar = 1.054571817e-34;
constexpr double me = 9.1093837015e-31;
const double lambda_c = hbar / (me * c);
}  // namespace

TEST_CASE("tensor magnetic polarizability of the electron") {
  CHECK(tmp_electron_fm3() == doctest::Approx(5.25e4).epsilon(5e-3));
  CHECK(tmp_electron_fm3() == doctest::Approx(5.2526e4).epsilon(1e-4));
  // Scales as 1/m^3.
  CHECK(tmp_polarizability_fm3(2.0 * me) == doctest::Approx(tmp_electron_fm3() / 8.0));
  CHECK_THROWS_AS(tmp_polarizability_fm3(0.0), std::domain_error);
}

TEST_CASE("tmp coefficient agrees with an independent SI route") {
  // b = -c (|e| B / hbar)^2 lambda_C^3 / 8, obtained by expanding alpha and
  // the Gaussian field conversion by hand.
  for (double B : {0.01, 1.0, 7.5}) {
    const double independent = -c * std::pow(q * B / hbar, 2) * std::pow(lambda_c, 3) / 8.0;
    CHECK(tmp_coefficient(tmp_electron_fm3(), B) == doctest::Approx(independent).epsilon(1e-9));
  }
  const double shift = tmp_energy_shift(tmp_electron_fm3(), 100, 1.0, 0.0);
  CHECK(shift == doctest::Approx(tmp_coefficient(tmp_electron_fm3(), 1.0) * 1e4).epsilon(1e-12));
  CHECK(shift == doctest::Approx(-4.98e4).epsilon(2e-3));
  CHECK(tmp_energy_shift(tmp_electron_fm3(), 5, 1.0, M_PI / 2) == doctest::Approx(0.0).epsilon(1e-20));
  CHECK_THROWS_AS(tmp_energy_shift(1.0, 0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("unit conversions against a hand table") {
  CHECK(units::fm3_to_m3(1.0) == doctest::Approx(1e-45));
  CHECK(units::m3_to_fm3(2e-45) == doctest::Approx(2.0));
  CHECK(units::joule_to_rad_per_s(1.0) == doctest::Approx(9.482521562e33).epsilon(1e-9));
  CHECK(units::ev_to_rad_per_s(1.0) == doctest::Approx(1.5192674488095e15).epsilon(1e-9));
  CHECK(units::rad_per_s_to_ev(units::ev_to_rad_per_s(3.7)) == doctest::Approx(3.7));
  CHECK(units::rad_per_s_to_joule(units::joule_to_rad_per_s(1e-20)) == doctest::Approx(1e-20));
  CHECK(constants::kReducedCompton == doctest::Approx(3.8615926796e-13).epsilon(1e-9));
}

TEST_CASE("Simpson rule is exact for quadratics on non-uniform grids") {
  std::vector<double> x{0.0, 0.1, 0.35, 0.4, 0.8, 1.0};  // five intervals
  auto f = [](double t) { return 2.0 - t + 3.0 * t * t; };
  std::vector<double> y;
  for (double t : x) y.push_back(f(t));
  const double exact = 2.0 - 0.5 + 1.0;
  CHECK(simpson(x, y) == doctest::Approx(exact).epsilon(1e-13));
  x.pop_back();
  y.pop_back();
  const double b = 0.8;
  CHECK(simpson(x, y) == doctest::Approx(2 * b - b * b / 2 + b * b * b).epsilon(1e-13));
  CHECK(simpson({0.0, 2.0}, {1.0, 3.0}) == doctest::Approx(4.0));
  CHECK(simpson({1.0}, {1.0}) == 0.0);
  CHECK_THROWS_AS(simpson({0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("mean square radius: analytic densities and grid convergence") {
  RadialDensity disk;
  for (int i = 0; i <= 40; ++i) {
    disk.r_m.push_back(2e-9 * i / 40.0);
    disk.value.push_back(1.0);
  }
  CHECK(mean_square_radius(disk) == doctest::Approx(0.5 * 4e-18).epsilon(1e-12));

  auto gaussian = [](int points) {
    RadialDensity d;
    const double w = 3e-9;
    for (int i = 0; i <= points; ++i) {
      const double r = 8.0 * w * i / points;
      d.r_m.push_back(r);
      d.value.push_back(std::exp(-r * r / (w * w)));
    }
    return d;
  };
  const double coarse = mean_square_radius(gaussian(400));
  const double fine = mean_square_radius(gaussian(800));
  CHECK(std::abs(coarse - fine) / fine < 1e-6);
  CHECK(fine == doctest::Approx(9e-18).epsilon(1e-8));
  CHECK(intrinsic_eqm(gaussian(800)) == doctest::Approx(fine));

  RadialDensity empty{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(mean_square_radius(empty), std::domain_error);
  CHECK(intrinsic_eqm(landau_geometry(1.0, 0, 3)) == doctest::Approx(landau_geometry(1.0, 0, 3).mean_r2));
}

TEST_CASE("radial density reader") {
  std::istringstream good("# r rho\n0 1\n1e-9 0.5\n\n  # comment\n2e-9 0\n");
  const RadialDensity d = read_radial_density(good);
  CHECK(d.r_m.size() == 3);
  CHECK(d.value[1] == 0.5);
  std::istringstream extra("0 1 2\n");
  CHECK_THROWS_WITH_AS(read_radial_density(extra), doctest::Contains("line 1"), std::invalid_argument);
  std::istringstream order("0 1\n1 1\n0.5 1\n");
  CHECK_THROWS_WITH_AS(read_radial_density(order), doctest::Contains("line 3"), std::domain_error);
  std::istringstream negative("0 1\n1 -1\n");
  CHECK_THROWS_AS(read_radial_density(negative), std::domain_error);
  CHECK_THROWS_AS(load_radial_density("/nonexistent/density.txt"), std::runtime_error);
}

TEST_CASE("spectroscopic quadrupole moment") {
  CHECK(spectroscopic_eqm(1.0, 1000.0, 1000.0) == doctest::Approx(0.997006).epsilon(1e-6));
  CHECK(spectroscopic_eqm(1.0, 0.5, 0.5) == doctest::Approx(0.0));
  CHECK(spectroscopic_eqm(2.0, 1.0, 1.0) == doctest::Approx(2.0 * 1.0 / (2.0 * 5.0)));
  double previous = -1.0;
  for (double j = 0.5; j < 200.0; j += 0.5) {
    for (double K = -j; K <= j; K += 1.0) CHECK(std::abs(spectroscopic_eqm(1.0, j, K)) <= 1.0 + 1e-15);
    const double stretched = spectroscopic_eqm(1.0, j, j);
    CHECK(stretched > previous);
    CHECK(stretched < 1.0);
    previous = stretched;
  }
  CHECK_THROWS_AS(spectroscopic_eqm(1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(spectroscopic_eqm(1.0, 2.0, 3.0), std::domain_error);
}

TEST_CASE("quadrupole tensor operator") {
  for (int j : {1, 2, 5}) {
    const AmOperators ops = build_operators(j);
    const QuadrupoleOperator Q = quadrupole_tensor_operator(ops, 0.7);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CHECK((Q(a, b) - Q(a, b).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((Q(a, b) - Q(b, a)).cwiseAbs().maxCoeff() == 0.0);
      }
    }
    CHECK(Q.ij_trace().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((Q(2, 2) * ops.Lz - ops.Lz * Q(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    // Stretched-state expectation value reproduces Qs.
    CHECK(Q(2, 2)(0, 0).real() == doctest::Approx(0.7).epsilon(1e-12));
  }
}

TEST_CASE("current quadrupole moment") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d L(g(rng), g(rng), g(rng));
    const Eigen::Vector3d s(g(rng), g(rng), g(rng));
    const Eigen::Matrix3d Q = ecqm(L, s, 6e5);
    CHECK(std::abs(Q.trace()) < 1e-12 * Q.cwiseAbs().maxCoeff());
    CHECK((Q - Q.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
  // L and s along z: Q_zz = -(2/eps) L mu_z with mu = e s / eps.
  const double eps = 2.0;
  const Eigen::Matrix3d Q = ecqm({0, 0, 10}, {0, 0, 0.5}, eps * 510998.95);
  CHECK(Q(2, 2) == doctest::Approx(-(2.0 / eps) * 10.0 * (-0.5 / eps)));
  CHECK_THROWS_AS(ecqm(Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), 0.0), std::domain_error);
}

TEST_CASE("order-of-magnitude models") {
  CHECK(beam_diameter_model_m(50) == doctest::Approx(10e-9));
  CHECK(eqm_scale_check(50, 0.5) == doctest::Approx(5e-17));
  CHECK(eqm_scale_check(100, 0.5) == doctest::Approx(2e-16));
  CHECK(delta_omega_estimate(100, -3e6) == doctest::Approx(100 * 3e6 * 1e-10));
  CHECK_THROWS_AS(eqm_scale_check(10, 0.0), std::domain_error);
  CHECK_THROWS_AS(delta_omega_estimate(0, 1.0), std::domain_error);
}

TEST_CASE("beam moments use the stretched state j = K = L + 1/2") {
  const MomentSet m = beam_moments(100, 1.0);
  CHECK(m.beta_T_fm3 == doctest::Approx(tmp_electron_fm3()));
  CHECK(m.mean_r2_m2 == doctest::Approx(1e-16));
  CHECK(m.Q0_e_m2 == doctest::Approx(1e-16));
  const double j = 100.5;
  CHECK(m.Qs_e_m2 == doctest::Approx((3 * j * j - j * (j + 1)) / ((j + 1) * (2 * j + 3)) * 1e-16));
  CHECK(m.w_m == doctest::Approx(landau_geometry(1.0, 0, 100).w_m));
}
