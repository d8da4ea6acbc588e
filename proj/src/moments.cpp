#include "oamsim/moments.hpp"

#include "oamsim/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oamsim {

using namespace constants;

double tmp_polarizability_fm3(double mass_kg) {
  if (!(mass_kg > 0.0)) throw std::domain_error("mass must be positive");
  // Natural units: beta_T = alpha / (8 m^3), and 1/m is the reduced Compton
  // wavelength of the particle.
  const double compton = kHbar / (mass_kg * kSpeedOfLight);
  return units::m3_to_fm3(kFineStructure * compton * compton * compton / 8.0);
}

double tmp_electron_fm3() { return tmp_polarizability_fm3(kElectronMass); }

double tmp_energy_shift(double beta_T_fm3, int L, double B_T, double angle) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  if (B_T < 0.0) throw std::domain_error("field magnitude must be non-negative");
  const double projection = L * B_T * std::cos(angle);
  // Gaussian B^2 = (4 pi / mu0) B_SI^2.
  const double energy_J =
      -units::fm3_to_m3(beta_T_fm3) * (4.0 * kPi / kVacuumPermeability) * projection * projection;
  return units::joule_to_rad_per_s(energy_J);
}

double tmp_coefficient(double beta_T_fm3, double B_T) {
  return -units::joule_to_rad_per_s(units::fm3_to_m3(beta_T_fm3) *
                                    (4.0 * kPi / kVacuumPermeability) * B_T * B_T);
}

RadialDensity read_radial_density(std::istream& in) {
  RadialDensity d;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double r = 0.0;
    double v = 0.0;
    std::string extra;
    if (!(fields >> r >> v) || (fields >> extra)) {
      throw std::invalid_argument("radial density line " + std::to_string(line_no) +
                                  ": expected two numeric columns");
    }
    if (v < 0.0 || !std::isfinite(v) || !std::isfinite(r) || r < 0.0) {
      throw std::domain_error("radial density line " + std::to_string(line_no) +
                              ": radius and density must be finite and non-negative");
    }
    if (!d.r_m.empty() && r <= d.r_m.back()) {
      throw std::domain_error("radial density line " + std::to_string(line_no) +
                              ": radii must be strictly increasing");
    }
    d.r_m.push_back(r);
    d.value.push_back(v);
  }
  return d;
}

RadialDensity load_radial_density(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open radial density file " + path.string());
  return read_radial_density(in);
}

double simpson(const std::vector<double>& x, const std::vector<double>& f) {
  if (x.size() != f.size()) throw std::invalid_argument("simpson: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * (x[1] - x[0]) * (f[0] + f[1]);

  const std::size_t intervals = n - 1;
  const std::size_t paired = intervals - intervals % 2;
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 <= paired; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    sum += (h0 + h1) / 6.0 *
           ((2.0 - h1 / h0) * f[i] + (h0 + h1) * (h0 + h1) / (h0 * h1) * f[i + 1] +
            (2.0 - h0 / h1) * f[i + 2]);
  }
  if (intervals % 2 == 1) {
    const double h0 = x[n - 2] - x[n - 3];
    const double h1 = x[n - 1] - x[n - 2];
    const double alpha = (2.0 * h1 * h1 + 3.0 * h1 * h0) / (6.0 * (h0 + h1));
    const double beta = (h1 * h1 + 3.0 * h1 * h0) / (6.0 * h0);
    const double eta = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
    sum += alpha * f[n - 1] + beta * f[n - 2] - eta * f[n - 3];
  }
  return sum;
}

double mean_square_radius(const RadialDensity& density) {
  if (density.r_m.size() != density.value.size() || density.r_m.size() < 2) {
    throw std::domain_error("radial density needs at least two samples");
  }
  std::vector<double> first(density.r_m.size());
  std::vector<double> third(density.r_m.size());
  for (std::size_t i = 0; i < density.r_m.size(); ++i) {
    const double r = density.r_m[i];
    first[i] = density.value[i] * r;
    third[i] = density.value[i] * r * r * r;
  }
  const double norm = simpson(density.r_m, first);
  if (!(norm > 0.0)) throw std::domain_error("radial density has zero norm");
  return simpson(density.r_m, third) / norm;
}

double intrinsic_eqm(const RadialDensity& density) {
  return -kElectronChargeSign * mean_square_radius(density);
}

double intrinsic_eqm(const LandauGeometry& geometry) {
  return -kElectronChargeSign * geometry.mean_r2;
}

double spectroscopic_eqm(double Q0, double j, double K) {
  if (!(j >= 0.5)) throw std::domain_error("total angular momentum j must be >= 1/2");
  if (std::abs(K) > j) throw std::domain_error("projection K must satisfy |K| <= j");
  return (3.0 * K * K - j * (j + 1.0)) / ((j + 1.0) * (2.0 * j + 3.0)) * Q0;
}

const CMatrix& QuadrupoleOperator::operator()(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == j) return components.at(static_cast<std::size_t>(i));
  if (i == 0) return components[j == 1 ? 3 : 4];
  return components[5];
}

CMatrix QuadrupoleOperator::ij_trace() const {
  return components[0] + components[1] + components[2];
}

QuadrupoleOperator quadrupole_tensor_operator(const AmOperators& ops, double Qs) {
  const int j = ops.L;
  if (j < 1) throw std::domain_error("quadrupole operator requires j >= 1");
  const double scale = 3.0 * Qs / (2.0 * j * (2.0 * j - 1.0));
  const CMatrix identity = CMatrix::Identity(ops.dim(), ops.dim());
  auto element = [&](int a, int b) {
    const CMatrix& A = ops.component(a);
    const CMatrix& B = ops.component(b);
    CMatrix q = A * B + B * A;
    if (a == b) q -= (2.0 / 3.0) * j * (j + 1.0) * identity;
    return CMatrix(scale * q);
  };
  QuadrupoleOperator out;
  out.components = {element(0, 0), element(1, 1), element(2, 2),
                    element(0, 1), element(0, 2), element(1, 2)};
  return out;
}

Eigen::Matrix3d ecqm(const Eigen::Vector3d& L, const Eigen::Vector3d& s, double epsilon_eV) {
  if (!(epsilon_eV > 0.0)) throw std::domain_error("total energy must be positive");
  // hbar = c = m_e = 1: energies in units of m_e c^2, lengths in hbar/(m_e c).
  const double eps = epsilon_eV / kElectronRestEnergyEv;
  const Eigen::Vector3d mu = kElectronChargeSign * s / eps;
  Eigen::Matrix3d q = 3.0 * (L * mu.transpose() + mu * L.transpose());
  q.diagonal().array() -= 2.0 * L.dot(mu);
  return -q / (2.0 * eps);
}

double delta_omega_estimate(int L, double grad_E_V_m2) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  return L * std::abs(grad_E_V_m2) * 1e-10;
}

double beam_diameter_model_m(int L) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  return 10e-9 * L / 50.0;
}

double eqm_scale_check(int L, double R0_m) {
  if (!(R0_m > 0.0)) throw std::domain_error("ring radius must be positive");
  const double radius = 0.5 * beam_diameter_model_m(L);
  return radius * radius / R0_m;
}

MomentSet beam_moments(int L, double B_T) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  MomentSet m;
  m.beta_T_fm3 = tmp_electron_fm3();
  m.w_m = landau_geometry(B_T, 0, L).w_m;
  const double radius = 0.5 * beam_diameter_model_m(L);
  m.mean_r2_m2 = radius * radius;
  m.Q0_e_m2 = -kElectronChargeSign * m.mean_r2_m2;
  const double j = L + 0.5;
  m.Qs_e_m2 = spectroscopic_eqm(m.Q0_e_m2, j, j);
  return m;
}

}  // namespace oamsim
