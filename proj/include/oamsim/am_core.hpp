#pragma once

// Angular-momentum operator algebra on the (2L+1)-dimensional |L, m> space,
// state construction, and extraction of vector/tensor polarization.
//
// Basis ordering is m = L, L-1, ..., -L. Cartesian axes (x, y, z) of the
// operators are identified with the cylindrical axes (rho, phi, z) of the
// storage-ring frame.

#include <Eigen/Dense>

#include <complex>

namespace oamsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct AmOperators {
  int L = 0;
  CMatrix Lx;
  CMatrix Ly;
  CMatrix Lz;
  CMatrix Lsq;

  Eigen::Index dim() const { return 2 * L + 1; }
  // axis: 0 = x (rho), 1 = y (phi), 2 = z.
  const CMatrix& component(int axis) const;
};

// Throws std::domain_error for L < 1.
AmOperators build_operators(int L);

// exp(-i H t) for Hermitian H, via eigendecomposition.
CMatrix unitary_exp(const CMatrix& H, double t);

enum class StateKind { Pure, Mixed };

class QuantumState {
 public:
  // Validates unit norm (1e-12) or Hermiticity / unit trace / positivity.
  static QuantumState pure(CVector amplitudes);
  static QuantumState mixed(CMatrix density);

  StateKind kind() const { return kind_; }
  Eigen::Index dim() const;
  const CVector& amplitudes() const;  // pure states only
  CMatrix density() const;
  Complex expectation(const CMatrix& op) const;

 private:
  QuantumState() = default;
  StateKind kind_ = StateKind::Pure;
  CVector psi_;
  CMatrix rho_;
};

// Highest-weight state |L, L> rotated so that its polarization points along
// (sin(theta) cos(psi), sin(theta) sin(psi), cos(theta)).
QuantumState coherent_state(const AmOperators& ops, double theta, double psi);

// Equal mixture of coherent states along n and -n: zero vector polarization,
// tensor polarization aligned with n.
QuantumState tensor_mixture(const AmOperators& ops, double theta, double psi);

/// Vector and tensor polarization in cylindrical axes (rho, phi, z).
///
/// Components a closed-form solution does not provide are stored as NaN.
struct PolarizationState {
  Eigen::Vector3d vector = Eigen::Vector3d::Zero();
  Eigen::Matrix3d tensor = Eigen::Matrix3d::Zero();

  double P_rho() const { return vector(0); }
  double P_phi() const { return vector(1); }
  double P_z() const { return vector(2); }

  // Checks |P| <= 1 + 1e-10 and the trace of the tensor (see polarization_tensor).
  bool is_consistent(double tolerance = 1e-10) const;
};

// P_i = <L_i> / L. Throws std::domain_error on dimension mismatch.
Eigen::Vector3d polarization_vector(const QuantumState& state, const AmOperators& ops);

// P_ij = (3 <L_i L_j + L_j L_i> - 2 L (L+1) delta_ij) / (2 L (2L - 1)).
// Symmetric and traceless for every state. Throws std::domain_error on
// dimension mismatch.
Eigen::Matrix3d polarization_tensor(const QuantumState& state, const AmOperators& ops);

PolarizationState polarization(const QuantumState& state, const AmOperators& ops);

enum class PolarizationKind { Vector, Tensor };

// Which printed form of the initial P_zz to use. TraceConsistent is
// (3 cos^2 theta - 1) / 2; Verbatim keeps the extra cos^2 psi factor.
enum class PzzVariant { TraceConsistent, Verbatim };

// Classical-limit initial polarization for a beam pointing along (theta, psi).
// For Tensor kind the vector part is zero and the tensor is unchanged.
PolarizationState initial_polarization_closed(double theta, double psi, PolarizationKind kind,
                                              PzzVariant variant = PzzVariant::TraceConsistent);

}  // namespace oamsim
