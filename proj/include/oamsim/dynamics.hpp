#pragma once

// Intrinsic-OAM polarization dynamics in ring fields.
//
// Three scenarios each isolate one bilinear term of
//   H = Omega . L + (1/2) alpha_ij {L_i, L_j}   (hbar = 1, rad/s):
//
//   tmp        H = Omega L_z + b L_z^2,                b = -beta_T B^2
//   frozen     H = 2 A L_r^2                           (Omega = 0)
//   resonance  H = Omega L_z + drive(t)                (b = 0)
//
// where L_r is the fixed radial axis of the co-moving frame (operator Lx).
// The resonance drive is either the co-rotating quadrupole field
//   (A/4) (L+^2 e^{-i chi} + L-^2 e^{i chi}),   chi = omega t + phi,
// or the physical linear oscillation 2 A cos(chi) L_r^2, which contains the
// co-rotating part plus terms suppressed by A/omega.
//
// The closed-form solutions are checked against a time-ordered matrix
// propagator that shares nothing with them beyond the Hamiltonian.

#include "oamsim/am_core.hpp"
#include "oamsim/ring_config.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oamsim {

enum class Mode { Tmp, Frozen, Resonance };
enum class DriveModel { CoRotating, Linear };

std::string to_string(Mode mode);
std::string to_string(PolarizationKind kind);
std::string to_string(DriveModel drive);
Mode parse_mode(const std::string& text);
PolarizationKind parse_kind(const std::string& text);
DriveModel parse_drive(const std::string& text);

struct DynamicsScenario {
  Mode mode = Mode::Frozen;
  int L = 1;
  double Omega = 0.0;        // rad/s, Larmor frequency in the co-moving frame
  double b = 0.0;            // rad/s, tmp coefficient
  double A = 0.0;            // rad/s, quadrupole coefficient
  double omega_drive = 0.0;  // rad/s, resonance only
  double phi = 0.0;          // rad, resonance only
  double theta = 0.0;        // initial direction
  double psi = 0.0;
  PolarizationKind kind = PolarizationKind::Vector;
  double t_end = 1.0;        // s
  int steps = 2;             // output grid points, including t = 0
  DriveModel drive = DriveModel::CoRotating;

  // Throws std::domain_error when the coefficients do not match the mode
  // (frozen: Omega = 0; tmp: A = 0; resonance: b = 0), steps < 2, L < 1 or
  // t_end <= 0.
  void validate() const;

  std::vector<double> times() const;
};

enum class SeriesSource { ClosedForm, Oracle };
std::string to_string(SeriesSource source);

struct PolarizationSeries {
  std::vector<double> times;
  std::vector<PolarizationState> states;
  SeriesSource source = SeriesSource::ClosedForm;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::domain_error on an inconsistent scenario or mismatched L.
CMatrix build_hamiltonian(const DynamicsScenario& scn, const AmOperators& ops, double t);

// Initial state used by the propagator: a coherent state for vector kind, the
// antiparallel mixture for tensor kind.
QuantumState initial_state(const DynamicsScenario& scn, const AmOperators& ops);

enum class Integrator {
  Midpoint,  // exp(-i H(t + h/2) h), second order
  Magnus4,   // two-point Gauss Magnus step, fourth order
};

struct OracleOptions {
  Integrator integrator = Integrator::Magnus4;
  double tolerance = 1e-9;  // final-time polarization change between halvings
  int max_halvings = 20;
  // Substeps per output interval for the first pass; 0 picks one from ||H||.
  int initial_substeps = 0;
  // Abort with NumericalError before a pass would exceed this many substeps.
  long long max_total_substeps = 400'000'000;
  // When set, refinement stops after the first pass.
  bool fixed_substeps = false;
  // Called with (t, rho) at every output point of the accepted pass.
  std::function<void(double, const CMatrix&)> observer;
};

struct OracleDiagnostics {
  int halvings = 0;
  int substeps_per_interval = 0;
  double final_change = 0.0;
  double max_trace_error = 0.0;
  double max_hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double max_norm_error = 0.0;  // pure-state ensemble members
};

struct OracleRun {
  PolarizationSeries series;
  OracleDiagnostics diagnostics;
};

// Time-ordered piecewise-constant propagation. Each substep applies
// exp(-i H_eff h) computed by eigendecomposition; the substep is halved until
// the final-time polarization changes by less than options.tolerance.
// Throws NumericalError after max_halvings halvings or when the substep
// budget is exhausted.
OracleRun evolve_oracle(const DynamicsScenario& scn, const AmOperators& ops,
                        const OracleOptions& options = {});

// Closed forms. Components a form does not provide are NaN.
PolarizationSeries closed_form_tmp(const DynamicsScenario& scn);        // tmp, tensor kind
PolarizationSeries closed_form_frozen(const DynamicsScenario& scn);     // P_z only
PolarizationSeries closed_form_resonance(const DynamicsScenario& scn);  // P_z only
PolarizationSeries closed_form(const DynamicsScenario& scn);

// omega' = sqrt((2 Omega - omega)^2 + A^2).
double resonance_rabi_frequency(const DynamicsScenario& scn);

// A = -Qs beta n B0 / (8 L^2 R0) in rad/s; Qs in |e| m^2.
double quadrupole_coefficient_frozen(double Qs_e_m2, int L, const RingSetup& setup);
// A = -Qs G / (8 L^2) for a resonance field E_r = G (R - R0) cos(omega t + phi).
double quadrupole_coefficient_resonance(double Qs_e_m2, int L, double gradient_V_m2);

// Rate of the cyclic P_z evolution for large L: 2 |A| (2L - 1). An estimate
// of the scale, equal to the exact rate 2|A| at L = 1.
double frozen_cyclic_rate(double A, int L);

// Right-hand side of the OAM equation of motion,
//   dL_k/dt = (Omega x L)_k + (1/2) alpha_ij (e_kil {L_l, L_j} + e_kjl {L_l, L_i}),
// evaluated as an expectation value in rho.
Eigen::Vector3d oam_equation_of_motion(const CMatrix& rho, const AmOperators& ops,
                                       const Eigen::Vector3d& Omega, const Eigen::Matrix3d& alpha);

struct ScanPoint {
  double omega = 0.0;
  double peak_abs_Pz = 0.0;
  double peak_abs_Pz_oracle = std::numeric_limits<double>::quiet_NaN();
};

struct ScanOptions {
  bool use_oracle = false;
  OracleOptions oracle;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Peak |P_z| over the run for each drive frequency. Results are independent of
// the thread count. Throws std::domain_error on an empty grid or a
// non-resonance base scenario.
std::vector<ScanPoint> resonance_scan(const DynamicsScenario& base,
                                      const std::vector<double>& omega_values,
                                      const ScanOptions& options = {});

// Index of the largest peak in the scan.
std::size_t scan_argmax(const std::vector<ScanPoint>& scan);

struct SplittingLevel {
  std::string label;      // "m_r=+k": projection on the radial axis
  int m_r = 0;
  double shift_rad_s = 0.0;
};

struct SplittingTable {
  std::vector<SplittingLevel> levels;
  double coefficient_rad_s = 0.0;  // -Qs dEr/dR / (4 L^2), multiplies L_r^2

  double sum() const;
};

// Eigenvalues of -(Qs / (4 L^2)) L_r^2 dEr/dR in rad/s, sorted by shift.
SplittingTable level_splitting(const AmOperators& ops, double Qs_e_m2, double dEr_dR_V_m2);

/// Oracle versus closed form for one scenario.
///
/// For L = 1 the series are compared pointwise (except under a linear
/// resonance drive, where only the documented rotating-wave tolerance applies).
/// For any L the dominant frequency of a mode-specific observable is extracted
/// from both series:
///   tmp       |P_perp|^2, whose frequency is 2 b (reported halved)
///   frozen    P_z, frequency 2 A
///   resonance P_z, frequency omega'
struct ComparisonReport {
  Mode mode = Mode::Frozen;
  int L = 1;
  std::string observable;
  bool amplitude_compared = false;
  double max_deviation = std::numeric_limits<double>::quiet_NaN();
  double amplitude_tolerance = std::numeric_limits<double>::quiet_NaN();
  double frequency_expected = 0.0;
  double frequency_oracle = 0.0;
  double frequency_closed = 0.0;
  double frequency_mismatch = 0.0;  // |oracle - closed| / |closed|
  double amplitude_factor = 0.0;    // oracle / closed excursion, recorded only
  OracleDiagnostics oracle;
};

ComparisonReport oracle_vs_closed_form(const DynamicsScenario& scn,
                                       const OracleOptions& options = {});

// Same comparison for an oracle run that has already been computed.
ComparisonReport compare_with_closed_form(const DynamicsScenario& scn, const OracleRun& run,
                                          const PolarizationSeries& closed);

}  // namespace oamsim
