#include "oamsim/dynamics.hpp"

#include "oamsim/constants.hpp"
#include "oamsim/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace oamsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PolarizationState nan_state() {
  PolarizationState s;
  s.vector.setConstant(kNaN);
  s.tensor.setConstant(kNaN);
  return s;
}

void require_ops(const DynamicsScenario& scn, const AmOperators& ops) {
  if (ops.L != scn.L) {
    throw std::domain_error("operators built for L = " + std::to_string(ops.L) +
                            " but scenario has L = " + std::to_string(scn.L));
  }
}

// Precomputed operators for reading polarization off a density matrix.
struct PolarizationReadout {
  explicit PolarizationReadout(const AmOperators& ops) : L(ops.L) {
    for (int i = 0; i < 3; ++i) {
      comp[i] = ops.component(i);
      for (int j = i; j < 3; ++j) {
        anti[i][j] = ops.component(i) * ops.component(j) + ops.component(j) * ops.component(i);
      }
    }
  }

  PolarizationState operator()(const CMatrix& rho) const {
    PolarizationState s;
    const double norm = 2.0 * L * (2.0 * L - 1.0);
    for (int i = 0; i < 3; ++i) {
      s.vector(i) = (rho * comp[i]).trace().real() / L;
      for (int j = i; j < 3; ++j) {
        const double a = (rho * anti[i][j]).trace().real();
        const double v = (3.0 * a - (i == j ? 2.0 * L * (L + 1.0) : 0.0)) / norm;
        s.tensor(i, j) = v;
        s.tensor(j, i) = v;
      }
    }
    return s;
  }

  int L;
  CMatrix comp[3];
  CMatrix anti[3][3];
};

struct Member {
  double weight;
  CVector psi;
};

std::vector<Member> decompose(const QuantumState& state) {
  if (state.kind() == StateKind::Pure) return {{1.0, state.amplitudes()}};
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(state.density());
  std::vector<Member> members;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    const double w = eig.eigenvalues()(k);
    if (w > 1e-15) members.push_back({w, eig.eigenvectors().col(k)});
  }
  return members;
}

CMatrix density_of(const std::vector<Member>& members, Eigen::Index dim) {
  CMatrix rho = CMatrix::Zero(dim, dim);
  for (const auto& m : members) rho += m.weight * m.psi * m.psi.adjoint();
  return rho;
}

double max_abs_difference(const PolarizationState& a, const PolarizationState& b) {
  return std::max((a.vector - b.vector).cwiseAbs().maxCoeff(),
                  (a.tensor - b.tensor).cwiseAbs().maxCoeff());
}

struct PassResult {
  std::vector<PolarizationState> states;
  OracleDiagnostics diagnostics;
};

class Propagator {
 public:
  Propagator(const DynamicsScenario& scn, const AmOperators& ops, const OracleOptions& opts)
      : scn_(scn), ops_(ops), opts_(opts), readout_(ops), initial_(decompose(initial_state(scn, ops))) {}

  bool time_independent() const { return scn_.mode != Mode::Resonance; }

  // One propagation over the full grid with n substeps per output interval.
  PassResult run(int substeps, const std::function<void(double, const CMatrix&)>& observer) const {
    const std::vector<double> grid = scn_.times();
    const double interval = grid[1] - grid[0];
    const double h = interval / substeps;
    std::vector<Member> members = initial_;

    PassResult out;
    out.diagnostics.substeps_per_interval = substeps;
    out.diagnostics.min_eigenvalue = 1.0;
    out.states.reserve(grid.size());

    CMatrix fixed_step;
    if (time_independent()) fixed_step = unitary_exp(build_hamiltonian(scn_, ops_, 0.0), h);

    auto record = [&](double t) {
      const CMatrix rho = density_of(members, ops_.dim());
      auto& d = out.diagnostics;
      d.max_trace_error = std::max(d.max_trace_error, std::abs(rho.trace() - Complex(1.0)));
      d.max_hermiticity_error =
          std::max(d.max_hermiticity_error, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(rho, Eigen::EigenvaluesOnly);
      d.min_eigenvalue = std::min(d.min_eigenvalue, eig.eigenvalues().minCoeff());
      for (const auto& m : members) {
        d.max_norm_error = std::max(d.max_norm_error, std::abs(m.psi.norm() - 1.0));
      }
      out.states.push_back(readout_(rho));
      if (observer) observer(t, rho);
    };

    record(grid[0]);
    for (std::size_t k = 1; k < grid.size(); ++k) {
      const double t0 = grid[k - 1];
      for (int s = 0; s < substeps; ++s) {
        const CMatrix step = time_independent() ? fixed_step : step_propagator(t0 + s * h, h);
        for (auto& m : members) m.psi = step * m.psi;
      }
      record(grid[k]);
    }
    return out;
  }

  int initial_substeps() const {
    if (opts_.initial_substeps > 0) return opts_.initial_substeps;
    if (time_independent()) return 1;
    const std::vector<double> grid = scn_.times();
    const double interval = grid[1] - grid[0];
    // Bound on the spectral radius of H over the run.
    const double L = scn_.L;
    const double scale = std::abs(scn_.Omega) * L + 2.0 * std::abs(scn_.A) * L * (L + 1.0) +
                         std::abs(scn_.omega_drive);
    const double n = std::ceil(scale * interval / 0.5);
    return static_cast<int>(std::clamp(n, 1.0, 1e6));
  }

 private:
  CMatrix step_propagator(double t, double h) const {
    if (opts_.integrator == Integrator::Midpoint) {
      return unitary_exp(build_hamiltonian(scn_, ops_, t + 0.5 * h), h);
    }
    const double offset = std::sqrt(3.0) / 6.0;
    const CMatrix H1 = build_hamiltonian(scn_, ops_, t + h * (0.5 - offset));
    const CMatrix H2 = build_hamiltonian(scn_, ops_, t + h * (0.5 + offset));
    CMatrix Heff = 0.5 * (H1 + H2) - Complex(0.0, std::sqrt(3.0) * h / 12.0) * (H2 * H1 - H1 * H2);
    Heff = (0.5 * (Heff + Heff.adjoint())).eval();
    return unitary_exp(Heff, h);
  }

  const DynamicsScenario& scn_;
  const AmOperators& ops_;
  const OracleOptions& opts_;
  PolarizationReadout readout_;
  std::vector<Member> initial_;
};

PolarizationSeries make_series(const DynamicsScenario& scn, SeriesSource source) {
  PolarizationSeries s;
  s.times = scn.times();
  s.source = source;
  s.states.assign(s.times.size(), nan_state());
  return s;
}

std::vector<double> component(const PolarizationSeries& s, int index) {
  std::vector<double> v(s.states.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = s.states[k].vector(index);
  return v;
}

std::vector<double> transverse_square(const PolarizationSeries& s) {
  std::vector<double> v(s.states.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& p = s.states[k].vector;
    v[k] = p(0) * p(0) + p(1) * p(1);
  }
  return v;
}

double excursion(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Tmp: return "tmp";
    case Mode::Frozen: return "frozen";
    case Mode::Resonance: return "resonance";
  }
  return "unknown";
}

std::string to_string(PolarizationKind kind) {
  return kind == PolarizationKind::Vector ? "vector" : "tensor";
}

std::string to_string(DriveModel drive) {
  return drive == DriveModel::CoRotating ? "corotating" : "linear";
}

std::string to_string(SeriesSource source) {
  return source == SeriesSource::ClosedForm ? "closed_form" : "oracle";
}

Mode parse_mode(const std::string& text) {
  if (text == "tmp") return Mode::Tmp;
  if (text == "frozen") return Mode::Frozen;
  if (text == "resonance") return Mode::Resonance;
  throw std::invalid_argument("unknown mode '" + text + "' (expected tmp, frozen or resonance)");
}

PolarizationKind parse_kind(const std::string& text) {
  if (text == "vector") return PolarizationKind::Vector;
  if (text == "tensor") return PolarizationKind::Tensor;
  throw std::invalid_argument("unknown polarization kind '" + text + "' (expected vector or tensor)");
}

DriveModel parse_drive(const std::string& text) {
  if (text == "corotating") return DriveModel::CoRotating;
  if (text == "linear") return DriveModel::Linear;
  throw std::invalid_argument("unknown drive model '" + text + "' (expected corotating or linear)");
}

void DynamicsScenario::validate() const {
  if (L < 1) throw std::domain_error("L must be >= 1");
  if (steps < 2) throw std::domain_error("steps must be >= 2");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw std::domain_error("t_end must be positive");
  for (double v : {Omega, b, A, omega_drive, phi, theta, psi}) {
    if (!std::isfinite(v)) throw std::domain_error("scenario parameters must be finite");
  }
  switch (mode) {
    case Mode::Frozen:
      if (Omega != 0.0) throw std::domain_error("frozen mode requires Omega = 0");
      if (b != 0.0) throw std::domain_error("frozen mode requires b = 0");
      break;
    case Mode::Tmp:
      if (A != 0.0) throw std::domain_error("tmp mode requires A = 0");
      break;
    case Mode::Resonance:
      if (b != 0.0) throw std::domain_error("resonance mode requires b = 0");
      break;
  }
}

std::vector<double> DynamicsScenario::times() const {
  std::vector<double> t(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) t[k] = t_end * k / (steps - 1);
  return t;
}

CMatrix build_hamiltonian(const DynamicsScenario& scn, const AmOperators& ops, double t) {
  scn.validate();
  require_ops(scn, ops);
  const CMatrix& Lz = ops.Lz;
  const CMatrix& Lr = ops.Lx;
  switch (scn.mode) {
    case Mode::Tmp:
      return scn.Omega * Lz + scn.b * Lz * Lz;
    case Mode::Frozen:
      return 2.0 * scn.A * Lr * Lr;
    case Mode::Resonance: {
      const double chi = scn.omega_drive * t + scn.phi;
      if (scn.drive == DriveModel::Linear) {
        return scn.Omega * Lz + 2.0 * scn.A * std::cos(chi) * Lr * Lr;
      }
      const CMatrix raise = ops.Lx + Complex(0.0, 1.0) * ops.Ly;
      const CMatrix raise2 = raise * raise;
      const CMatrix drive = (scn.A / 4.0) * std::polar(1.0, -chi) * raise2;
      return scn.Omega * Lz + drive + drive.adjoint();
    }
  }
  throw std::domain_error("unknown mode");
}

QuantumState initial_state(const DynamicsScenario& scn, const AmOperators& ops) {
  require_ops(scn, ops);
  return scn.kind == PolarizationKind::Vector ? coherent_state(ops, scn.theta, scn.psi)
                                              : tensor_mixture(ops, scn.theta, scn.psi);
}

OracleRun evolve_oracle(const DynamicsScenario& scn, const AmOperators& ops, const OracleOptions& options) {
  scn.validate();
  require_ops(scn, ops);
  Propagator prop(scn, ops, options);
  const long long intervals = scn.steps - 1;

  auto check_budget = [&](long long substeps) {
    if (substeps * intervals > options.max_total_substeps) {
      throw NumericalError("oracle substep budget exhausted (" + std::to_string(substeps * intervals) +
                           " substeps requested)");
    }
  };

  long long substeps = prop.initial_substeps();
  check_budget(substeps);
  const bool single_pass = options.fixed_substeps || prop.time_independent();
  PassResult current = prop.run(static_cast<int>(substeps), single_pass ? options.observer : nullptr);
  int halvings = 0;
  double change = 0.0;

  if (!single_pass) {
    while (true) {
      if (halvings == options.max_halvings) {
        throw NumericalError("oracle refinement did not converge after " + std::to_string(halvings) +
                             " halvings (last change " + std::to_string(change) + ")");
      }
      substeps *= 2;
      check_budget(substeps);
      PassResult finer = prop.run(static_cast<int>(substeps), nullptr);
      ++halvings;
      change = max_abs_difference(finer.states.back(), current.states.back());
      current = std::move(finer);
      if (change < options.tolerance) break;
    }
    if (options.observer) prop.run(static_cast<int>(substeps), options.observer);
  }

  OracleRun run;
  run.series.times = scn.times();
  run.series.states = std::move(current.states);
  run.series.source = SeriesSource::Oracle;
  run.diagnostics = current.diagnostics;
  run.diagnostics.halvings = halvings;
  run.diagnostics.final_change = change;
  return run;
}

PolarizationSeries closed_form_tmp(const DynamicsScenario& scn) {
  scn.validate();
  if (scn.mode != Mode::Tmp) throw std::domain_error("closed_form_tmp needs tmp mode");
  if (scn.kind != PolarizationKind::Tensor) {
    throw std::domain_error("the tmp closed form describes tensor-polarized beams");
  }
  PolarizationSeries s = make_series(scn, SeriesSource::ClosedForm);
  const double amp = 0.5 * std::sin(2.0 * scn.theta);
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const double t = s.times[k];
    const double phase = scn.Omega * t + scn.psi;
    const double beat = std::sin(scn.b * t);
    s.states[k].vector = {-amp * std::sin(phase) * beat, amp * std::cos(phase) * beat, 0.0};
  }
  return s;
}

PolarizationSeries closed_form_frozen(const DynamicsScenario& scn) {
  scn.validate();
  if (scn.mode != Mode::Frozen) throw std::domain_error("closed_form_frozen needs frozen mode");
  PolarizationSeries s = make_series(scn, SeriesSource::ClosedForm);
  const double st = std::sin(scn.theta);
  const double transfer = 0.5 * st * st * std::sin(2.0 * scn.psi);
  const double cos_theta = scn.kind == PolarizationKind::Vector ? std::cos(scn.theta) : 0.0;
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const double arg = 2.0 * scn.A * s.times[k];
    s.states[k].vector(2) = std::cos(arg) * cos_theta + transfer * std::sin(arg);
  }
  return s;
}

double resonance_rabi_frequency(const DynamicsScenario& scn) {
  const double detuning = 2.0 * scn.Omega - scn.omega_drive;
  const double w = std::hypot(detuning, scn.A);
  if (w == 0.0) throw std::domain_error("omega' vanishes: zero detuning and zero A");
  return w;
}

PolarizationSeries closed_form_resonance(const DynamicsScenario& scn) {
  scn.validate();
  if (scn.mode != Mode::Resonance) throw std::domain_error("closed_form_resonance needs resonance mode");
  PolarizationSeries s = make_series(scn, SeriesSource::ClosedForm);
  if (scn.A == 0.0 && 2.0 * scn.Omega == scn.omega_drive) {
    // No drive at all: P_z stays at its initial value.
    const double pz = scn.kind == PolarizationKind::Vector ? std::cos(scn.theta) : 0.0;
    for (auto& st : s.states) st.vector(2) = pz;
    return s;
  }
  const double w = resonance_rabi_frequency(scn);
  const double detuning = 2.0 * scn.Omega - scn.omega_drive;
  const double st = std::sin(scn.theta);
  const double alpha = 2.0 * scn.psi - scn.phi;
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const double half = 0.5 * w * s.times[k];
    const double sh = std::sin(half);
    const double ch = std::cos(half);
    double pz = scn.A / w * st * st * sh * (detuning / w * sh * std::cos(alpha) + ch * std::sin(alpha));
    if (scn.kind == PolarizationKind::Vector) {
      pz += (1.0 - 2.0 * scn.A * scn.A / (w * w) * sh * sh) * std::cos(scn.theta);
    }
    s.states[k].vector(2) = pz;
  }
  return s;
}

PolarizationSeries closed_form(const DynamicsScenario& scn) {
  switch (scn.mode) {
    case Mode::Tmp: return closed_form_tmp(scn);
    case Mode::Frozen: return closed_form_frozen(scn);
    case Mode::Resonance: return closed_form_resonance(scn);
  }
  throw std::domain_error("unknown mode");
}

double quadrupole_coefficient_frozen(double Qs_e_m2, int L, const RingSetup& setup) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  return quadrupole_coefficient_resonance(Qs_e_m2, L, -field_gradients(setup).dEr_dR_V_m2);
}

double quadrupole_coefficient_resonance(double Qs_e_m2, int L, double gradient_V_m2) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  const double energy_J = -Qs_e_m2 * constants::kElementaryCharge * gradient_V_m2 / (8.0 * L * L);
  return units::joule_to_rad_per_s(energy_J);
}

double frozen_cyclic_rate(double A, int L) {
  if (L < 1) throw std::domain_error("L must be >= 1");
  return 2.0 * std::abs(A) * (2.0 * L - 1.0);
}

Eigen::Vector3d oam_equation_of_motion(const CMatrix& rho, const AmOperators& ops,
                                       const Eigen::Vector3d& Omega, const Eigen::Matrix3d& alpha) {
  if (rho.rows() != ops.dim() || rho.cols() != ops.dim()) {
    throw std::domain_error("density matrix dimension does not match the operators");
  }
  auto levi = [](int i, int j, int k) { return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0; };
  Eigen::Vector3d mean;
  Eigen::Matrix3d anti;
  for (int i = 0; i < 3; ++i) {
    mean(i) = (rho * ops.component(i)).trace().real();
    for (int j = 0; j < 3; ++j) {
      const CMatrix op = ops.component(i) * ops.component(j) + ops.component(j) * ops.component(i);
      anti(i, j) = (rho * op).trace().real();
    }
  }
  Eigen::Vector3d rate = Omega.cross(mean);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int l = 0; l < 3; ++l) {
          rate(k) += 0.5 * alpha(i, j) * (levi(k, i, l) * anti(l, j) + levi(k, j, l) * anti(l, i));
        }
      }
    }
  }
  return rate;
}

std::vector<ScanPoint> resonance_scan(const DynamicsScenario& base, const std::vector<double>& omega_values,
                                      const ScanOptions& options) {
  if (omega_values.empty()) throw std::domain_error("resonance scan needs at least one frequency");
  if (base.mode != Mode::Resonance) throw std::domain_error("resonance scan needs a resonance scenario");
  base.validate();

  std::vector<ScanPoint> out(omega_values.size());
  const AmOperators ops = options.use_oracle ? build_operators(base.L) : AmOperators{};

  auto evaluate = [&](std::size_t i) {
    DynamicsScenario scn = base;
    scn.omega_drive = omega_values[i];
    ScanPoint p;
    p.omega = scn.omega_drive;
    for (const auto& st : closed_form_resonance(scn).states) {
      p.peak_abs_Pz = std::max(p.peak_abs_Pz, std::abs(st.P_z()));
    }
    if (options.use_oracle) {
      double peak = 0.0;
      for (const auto& st : evolve_oracle(scn, ops, options.oracle).series.states) {
        peak = std::max(peak, std::abs(st.P_z()));
      }
      p.peak_abs_Pz_oracle = peak;
    }
    out[i] = p;
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(omega_values.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < omega_values.size(); ++i) evaluate(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      (void)w;
      for (std::size_t i = next++; i < omega_values.size(); i = next++) {
        if (failed) return;
        try {
          evaluate(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::size_t scan_argmax(const std::vector<ScanPoint>& scan) {
  if (scan.empty()) throw std::domain_error("empty scan");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].peak_abs_Pz > scan[best].peak_abs_Pz) best = i;
  }
  return best;
}

double SplittingTable::sum() const {
  double total = 0.0;
  for (const auto& l : levels) total += l.shift_rad_s;
  return total;
}

SplittingTable level_splitting(const AmOperators& ops, double Qs_e_m2, double dEr_dR_V_m2) {
  if (ops.L < 1) throw std::domain_error("L must be >= 1");
  SplittingTable table;
  const double L = ops.L;
  table.coefficient_rad_s =
      units::joule_to_rad_per_s(-Qs_e_m2 * constants::kElementaryCharge * dEr_dR_V_m2 / (4.0 * L * L));
  const CMatrix W = table.coefficient_rad_s * ops.Lx * ops.Lx;

  // Eigenvectors of L_r carry the labels; W is diagonal in that basis.
  Eigen::SelfAdjointEigenSolver<CMatrix> radial(ops.Lx);
  for (Eigen::Index k = 0; k < radial.eigenvalues().size(); ++k) {
    const CVector v = radial.eigenvectors().col(k);
    SplittingLevel level;
    level.m_r = static_cast<int>(std::lround(radial.eigenvalues()(k)));
    level.shift_rad_s = (v.adjoint() * W * v)(0).real();
    level.label = "m_r=" + std::string(level.m_r >= 0 ? "+" : "") + std::to_string(level.m_r);
    table.levels.push_back(level);
  }
  std::stable_sort(table.levels.begin(), table.levels.end(), [](const auto& a, const auto& b) {
    return a.shift_rad_s != b.shift_rad_s ? a.shift_rad_s < b.shift_rad_s : a.m_r < b.m_r;
  });
  return table;
}

ComparisonReport oracle_vs_closed_form(const DynamicsScenario& scn, const OracleOptions& options) {
  scn.validate();
  const AmOperators ops = build_operators(scn.L);
  return compare_with_closed_form(scn, evolve_oracle(scn, ops, options), closed_form(scn));
}

ComparisonReport compare_with_closed_form(const DynamicsScenario& scn, const OracleRun& run,
                                          const PolarizationSeries& closed) {
  const PolarizationSeries& oracle = run.series;
  if (oracle.times.size() != closed.times.size()) {
    throw std::invalid_argument("oracle and closed-form series have different grids");
  }
  ComparisonReport report;
  report.mode = scn.mode;
  report.L = scn.L;
  report.oracle = run.diagnostics;

  const bool linear = scn.mode == Mode::Resonance && scn.drive == DriveModel::Linear;
  if (scn.L == 1) {
    report.amplitude_compared = true;
    report.amplitude_tolerance = linear ? 5.0 * std::abs(scn.A) / scn.omega_drive : 1e-6;
    double worst = 0.0;
    for (std::size_t k = 0; k < closed.states.size(); ++k) {
      for (int i = 0; i < 3; ++i) {
        const double c = closed.states[k].vector(i);
        if (!std::isnan(c)) worst = std::max(worst, std::abs(c - oracle.states[k].vector(i)));
      }
      for (int i = 0; i < 9; ++i) {
        const double c = closed.states[k].tensor(i);
        if (!std::isnan(c)) worst = std::max(worst, std::abs(c - oracle.states[k].tensor(i)));
      }
    }
    report.max_deviation = worst;
  }

  std::vector<double> obs_oracle;
  std::vector<double> obs_closed;
  double factor = 1.0;
  switch (scn.mode) {
    case Mode::Tmp:
      report.observable = "|P_perp|^2";
      obs_oracle = transverse_square(oracle);
      obs_closed = transverse_square(closed);
      report.frequency_expected = std::abs(scn.b);
      factor = 0.5;
      break;
    case Mode::Frozen:
      report.observable = "P_z";
      obs_oracle = component(oracle, 2);
      obs_closed = component(closed, 2);
      report.frequency_expected = 2.0 * std::abs(scn.A);
      break;
    case Mode::Resonance:
      report.observable = "P_z";
      obs_oracle = component(oracle, 2);
      obs_closed = component(closed, 2);
      report.frequency_expected = resonance_rabi_frequency(scn);
      break;
  }
  report.frequency_oracle = factor * dominant_frequency(oracle.times, obs_oracle).omega;
  report.frequency_closed = factor * dominant_frequency(closed.times, obs_closed).omega;
  report.frequency_mismatch =
      std::abs(report.frequency_oracle - report.frequency_closed) / std::abs(report.frequency_closed);
  const double closed_range = excursion(obs_closed);
  report.amplitude_factor = closed_range > 0.0 ? excursion(obs_oracle) / closed_range : kNaN;
  return report;
}

}  // namespace oamsim
