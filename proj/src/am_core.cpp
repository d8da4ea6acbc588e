#include "oamsim/am_core.hpp"

#include "oamsim/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oamsim {

namespace {

void require_matching_dim(const QuantumState& state, const AmOperators& ops) {
  if (state.dim() != ops.dim()) {
    throw std::domain_error("state dimension " + std::to_string(state.dim()) +
                            " does not match operator dimension " + std::to_string(ops.dim()));
  }
}

}  // namespace

const CMatrix& AmOperators::component(int axis) const {
  switch (axis) {
    case 0: return Lx;
    case 1: return Ly;
    case 2: return Lz;
    default: throw std::out_of_range("axis must be 0, 1 or 2");
  }
}

AmOperators build_operators(int L) {
  if (L < 1) {
    throw std::domain_error("angular momentum L must be >= 1, got " + std::to_string(L));
  }
  const Eigen::Index dim = 2 * L + 1;
  CMatrix raise = CMatrix::Zero(dim, dim);
  CMatrix lz = CMatrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double m = L - static_cast<double>(k);
    lz(k, k) = m;
    if (k > 0) {
      // L+ |m> = sqrt(L(L+1) - m(m+1)) |m+1>, and |m+1> sits at row k-1.
      raise(k - 1, k) = std::sqrt(L * (L + 1.0) - m * (m + 1.0));
    }
  }
  const CMatrix lower = raise.adjoint();

  AmOperators ops;
  ops.L = L;
  ops.Lx = 0.5 * (raise + lower);
  ops.Ly = Complex(0.0, -0.5) * (raise - lower);
  ops.Lz = lz;
  ops.Lsq = ops.Lx * ops.Lx + ops.Ly * ops.Ly + ops.Lz * ops.Lz;
  return ops;
}

CMatrix unitary_exp(const CMatrix& H, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(H);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of Hamiltonian failed");
  }
  const Eigen::VectorXd& energies = solver.eigenvalues();
  CVector phases(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    phases(i) = std::polar(1.0, -energies(i) * t);
  }
  const CMatrix& V = solver.eigenvectors();
  const CMatrix U = V * phases.asDiagonal() * V.adjoint();
  // One Newton-Schulz polar step removes the O(eps) non-unitarity left by the
  // eigensolver, which otherwise accumulates over long propagations.
  const CMatrix gram = U.adjoint() * U;
  return U * (1.5 * CMatrix::Identity(U.rows(), U.cols()) - 0.5 * gram);
}

QuantumState QuantumState::pure(CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (amplitudes.size() == 0 || std::abs(norm - 1.0) > 1e-12) {
    throw std::domain_error("pure state must have unit norm");
  }
  QuantumState s;
  s.kind_ = StateKind::Pure;
  s.psi_ = std::move(amplitudes);
  return s;
}

QuantumState QuantumState::mixed(CMatrix density) {
  if (density.rows() == 0 || density.rows() != density.cols()) {
    throw std::domain_error("density matrix must be square and non-empty");
  }
  if ((density - density.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("density matrix must be Hermitian");
  }
  if (std::abs(density.trace() - Complex(1.0)) > 1e-12) {
    throw std::domain_error("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(density, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw std::domain_error("density matrix must be positive semidefinite");
  }
  QuantumState s;
  s.kind_ = StateKind::Mixed;
  s.rho_ = std::move(density);
  return s;
}

Eigen::Index QuantumState::dim() const {
  return kind_ == StateKind::Pure ? psi_.size() : rho_.rows();
}

const CVector& QuantumState::amplitudes() const {
  if (kind_ != StateKind::Pure) {
    throw std::logic_error("amplitudes() requested from a mixed state");
  }
  return psi_;
}

CMatrix QuantumState::density() const {
  if (kind_ == StateKind::Pure) return psi_ * psi_.adjoint();
  return rho_;
}

Complex QuantumState::expectation(const CMatrix& op) const {
  if (kind_ == StateKind::Pure) return psi_.dot(op * psi_);
  return (rho_ * op).trace();
}

QuantumState coherent_state(const AmOperators& ops, double theta, double psi) {
  // Rotation by theta about the horizontal axis (-sin psi, cos psi, 0) carries
  // e_z onto the target direction.
  const CMatrix generator = -std::sin(psi) * ops.Lx + std::cos(psi) * ops.Ly;
  CVector highest = CVector::Zero(ops.dim());
  highest(0) = 1.0;
  CVector rotated = unitary_exp(generator, theta) * highest;
  rotated.normalize();
  return QuantumState::pure(std::move(rotated));
}

QuantumState tensor_mixture(const AmOperators& ops, double theta, double psi) {
  const CVector up = coherent_state(ops, theta, psi).amplitudes();
  const CVector down = coherent_state(ops, constants::kPi - theta, psi + constants::kPi).amplitudes();
  CMatrix rho = 0.5 * (up * up.adjoint() + down * down.adjoint());
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return QuantumState::mixed(std::move(rho));
}

Eigen::Vector3d polarization_vector(const QuantumState& state, const AmOperators& ops) {
  require_matching_dim(state, ops);
  Eigen::Vector3d P;
  for (int i = 0; i < 3; ++i) {
    P(i) = state.expectation(ops.component(i)).real() / ops.L;
  }
  return P;
}

Eigen::Matrix3d polarization_tensor(const QuantumState& state, const AmOperators& ops) {
  require_matching_dim(state, ops);
  const double L = ops.L;
  const double norm = 2.0 * L * (2.0 * L - 1.0);
  Eigen::Matrix3d T;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const CMatrix& a = ops.component(i);
      const CMatrix& b = ops.component(j);
      const double anti = state.expectation(a * b + b * a).real();
      const double value = (3.0 * anti - (i == j ? 2.0 * L * (L + 1.0) : 0.0)) / norm;
      T(i, j) = value;
      T(j, i) = value;
    }
  }
  return T;
}

PolarizationState polarization(const QuantumState& state, const AmOperators& ops) {
  return {polarization_vector(state, ops), polarization_tensor(state, ops)};
}

bool PolarizationState::is_consistent(double tolerance) const {
  if (vector.allFinite() && vector.norm() > 1.0 + tolerance) return false;
  if (tensor.allFinite()) {
    if ((tensor - tensor.transpose()).cwiseAbs().maxCoeff() > tolerance) return false;
    if (std::abs(tensor.trace()) > tolerance) return false;
  }
  return true;
}

PolarizationState initial_polarization_closed(double theta, double psi, PolarizationKind kind,
                                              PzzVariant variant) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double sp = std::sin(psi);
  const double cp = std::cos(psi);

  PolarizationState out;
  if (kind == PolarizationKind::Vector) {
    out.vector = {st * cp, st * sp, ct};
  }
  Eigen::Matrix3d& T = out.tensor;
  T(0, 0) = 0.5 * (3.0 * st * st * cp * cp - 1.0);
  T(1, 1) = 0.5 * (3.0 * st * st * sp * sp - 1.0);
  T(2, 2) = variant == PzzVariant::TraceConsistent ? 0.5 * (3.0 * ct * ct - 1.0)
                                                   : 0.5 * (3.0 * ct * ct * cp * cp - 1.0);
  T(0, 1) = T(1, 0) = 0.75 * st * st * std::sin(2.0 * psi);
  T(0, 2) = T(2, 0) = 0.75 * std::sin(2.0 * theta) * cp;
  T(1, 2) = T(2, 1) = 0.75 * std::sin(2.0 * theta) * sp;
  return out;
}

}  // namespace oamsim
