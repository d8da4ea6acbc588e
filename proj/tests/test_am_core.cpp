#include "oamsim/am_core.hpp"
#include "oamsim/constants.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace oamsim;
using constants::kPi;

namespace {

const Complex I(0.0, 1.0);

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double binomial(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

// Coherent state from the Wigner small-d function of the stretched state:
// amplitude of |L, m> is e^{-i m psi} d^L_{m L}(theta).
CVector wigner_coherent(int L, double theta, double psi) {
  CVector v(2 * L + 1);
  for (int k = 0; k <= 2 * L; ++k) {
    const int m = L - k;
    const double d = std::sqrt(binomial(2 * L, L + m)) * std::pow(std::cos(theta / 2), L + m) *
                     std::pow(std::sin(theta / 2), L - m);
    v(k) = std::polar(d, -m * psi);
  }
  return v;
}

CMatrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> g;
  CMatrix G(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) G(i, j) = Complex(g(rng), g(rng));
  CMatrix rho = G * G.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace

TEST_CASE("L = 1 operators match the textbook matrices") {
  const AmOperators ops = build_operators(1);
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix Lx(3, 3), Ly(3, 3), Lz(3, 3);
  Lx << 0, s, 0, s, 0, s, 0, s, 0;
  Ly << 0, -I * s, 0, I * s, 0, -I * s, 0, I * s, 0;
  Lz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  CHECK(max_abs(ops.Lx - Lx) < 1e-15);
  CHECK(max_abs(ops.Ly - Ly) < 1e-15);
  CHECK(max_abs(ops.Lz - Lz) < 1e-15);
  CHECK(max_abs(ops.Lsq - 2.0 * CMatrix::Identity(3, 3)) < 1e-15);
  CHECK(&ops.component(0) == &ops.Lx);
  CHECK(&ops.component(2) == &ops.Lz);
}

TEST_CASE("commutation relations, Casimir and Hermiticity for L = 1..20") {
  for (int L = 1; L <= 20; ++L) {
    CAPTURE(L);
    const AmOperators ops = build_operators(L);
    REQUIRE(ops.dim() == 2 * L + 1);
    CHECK(max_abs(ops.Lx * ops.Ly - ops.Ly * ops.Lx - I * ops.Lz) < 1e-12);
    CHECK(max_abs(ops.Ly * ops.Lz - ops.Lz * ops.Ly - I * ops.Lx) < 1e-12);
    CHECK(max_abs(ops.Lz * ops.Lx - ops.Lx * ops.Lz - I * ops.Ly) < 1e-12);
    const CMatrix casimir = ops.Lx * ops.Lx + ops.Ly * ops.Ly + ops.Lz * ops.Lz;
    CHECK(max_abs(casimir - L * (L + 1.0) * CMatrix::Identity(ops.dim(), ops.dim())) < 1e-12);
    CHECK(max_abs(ops.Lsq - casimir) < 1e-12);
    for (int a = 0; a < 3; ++a) CHECK(max_abs(ops.component(a) - ops.component(a).adjoint()) < 1e-15);
  }
}

TEST_CASE("build_operators rejects L < 1") {
  CHECK_THROWS_AS(build_operators(0), std::domain_error);
  CHECK_THROWS_AS(build_operators(-3), std::domain_error);
}

TEST_CASE("unitary_exp of a diagonal generator is a diagonal phase") {
  const AmOperators ops = build_operators(3);
  const double t = 0.37;
  const CMatrix U = unitary_exp(ops.Lz, t);
  for (int k = 0; k < 7; ++k) {
    const int m = 3 - k;
    CHECK(std::abs(U(k, k) - std::polar(1.0, -m * t)) < 1e-14);
  }
  const CMatrix V = unitary_exp(ops.Lx + 0.3 * ops.Lz * ops.Lz, 2.1);
  CHECK(max_abs(V.adjoint() * V - CMatrix::Identity(7, 7)) < 1e-14);
}

TEST_CASE("coherent states agree with the Wigner-d construction") {
  for (int L : {1, 2, 5, 10}) {
    for (double theta : {0.0, 0.4, kPi / 2, 2.5, kPi}) {
      for (double psi : {0.0, 1.1, -2.3}) {
        CAPTURE(L);
        CAPTURE(theta);
        CAPTURE(psi);
        const AmOperators ops = build_operators(L);
        const CVector a = coherent_state(ops, theta, psi).amplitudes();
        const CVector b = wigner_coherent(L, theta, psi);
        CHECK(max_abs(a * a.adjoint() - b * b.adjoint()) < 1e-10);
      }
    }
  }
}

TEST_CASE("coherent-state polarization points along n with P_ij = (3 n_i n_j - delta_ij) / 2") {
  for (int L : {1, 3, 7}) {
    const AmOperators ops = build_operators(L);
    const double theta = 1.0, psi = 0.6;
    const Eigen::Vector3d n(std::sin(theta) * std::cos(psi), std::sin(theta) * std::sin(psi), std::cos(theta));
    const PolarizationState p = polarization(coherent_state(ops, theta, psi), ops);
    CHECK((p.vector - n).norm() < 1e-12);
    const Eigen::Matrix3d expected = 0.5 * (3.0 * n * n.transpose() - Eigen::Matrix3d::Identity());
    CHECK((p.tensor - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(p.is_consistent());
  }
}

TEST_CASE("tensor mixture carries no vector polarization but the aligned tensor") {
  const AmOperators ops = build_operators(2);
  const QuantumState mix = tensor_mixture(ops, 0.8, -0.4);
  CHECK(mix.kind() == StateKind::Mixed);
  const PolarizationState p = polarization(mix, ops);
  const PolarizationState c = polarization(coherent_state(ops, 0.8, -0.4), ops);
  CHECK(p.vector.norm() < 1e-12);
  CHECK((p.tensor - c.tensor).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("polarization tensor is symmetric and traceless for random states") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const AmOperators ops = build_operators(1 + k % 6);
    const Eigen::Matrix3d T = polarization_tensor(QuantumState::mixed(random_density(rng, ops.dim())), ops);
    CHECK((T - T.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(T.trace()) < 1e-10);
  }
}

TEST_CASE("special states: |1,1>, |1,0> and the maximally mixed state") {
  const AmOperators ops = build_operators(1);
  CVector up = CVector::Zero(3);
  up(0) = 1.0;
  CVector zero = CVector::Zero(3);
  zero(1) = 1.0;
  const PolarizationState pu = polarization(QuantumState::pure(up), ops);
  CHECK(pu.P_z() == doctest::Approx(1.0));
  CHECK(pu.tensor(2, 2) == doctest::Approx(1.0));
  CHECK(pu.tensor(0, 0) == doctest::Approx(-0.5));
  const PolarizationState p0 = polarization(QuantumState::pure(zero), ops);
  CHECK(p0.tensor(2, 2) == doctest::Approx(-2.0));
  CHECK(p0.tensor(0, 0) == doctest::Approx(1.0));

  const AmOperators ops4 = build_operators(4);
  const CMatrix flat = CMatrix::Identity(9, 9) / 9.0;
  const PolarizationState pm = polarization(QuantumState::mixed(flat), ops4);
  CHECK(pm.vector.norm() < 1e-14);
  CHECK(pm.tensor.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("state validation") {
  CVector bad = CVector::Ones(3);
  CHECK_THROWS_AS(QuantumState::pure(bad), std::domain_error);
  CMatrix nonherm = CMatrix::Identity(3, 3) / 3.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(QuantumState::mixed(nonherm), std::domain_error);
  CHECK_THROWS_AS(QuantumState::mixed(CMatrix::Identity(3, 3)), std::domain_error);
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(QuantumState::mixed(negative), std::domain_error);
  CHECK_THROWS_AS(QuantumState::mixed(CMatrix::Identity(3, 3) / 3.0).amplitudes(), std::logic_error);

  const AmOperators ops = build_operators(2);
  CVector wrong = CVector::Zero(3);
  wrong(0) = 1.0;
  CHECK_THROWS_AS(polarization_vector(QuantumState::pure(wrong), ops), std::domain_error);
  CHECK_THROWS_AS(polarization_tensor(QuantumState::pure(wrong), ops), std::domain_error);
}

TEST_CASE("closed-form initial polarization matches the coherent state") {
  const AmOperators ops = build_operators(1);
  for (double theta : {0.3, 1.2, 2.9}) {
    for (double psi : {0.0, 0.7, 4.0}) {
      const PolarizationState closed = initial_polarization_closed(theta, psi, PolarizationKind::Vector);
      const PolarizationState exact = polarization(coherent_state(ops, theta, psi), ops);
      CHECK((closed.vector - exact.vector).norm() < 1e-12);
      CHECK((closed.tensor - exact.tensor).cwiseAbs().maxCoeff() < 1e-12);
      const PolarizationState t = initial_polarization_closed(theta, psi, PolarizationKind::Tensor);
      CHECK(t.vector.norm() == 0.0);
      CHECK((t.tensor - exact.tensor).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("verbatim P_zz variant keeps the extra cos^2 psi factor") {
  const PolarizationState a = initial_polarization_closed(0.0, kPi / 2, PolarizationKind::Vector);
  const PolarizationState b =
      initial_polarization_closed(0.0, kPi / 2, PolarizationKind::Vector, PzzVariant::Verbatim);
  CHECK(a.tensor(2, 2) == doctest::Approx(1.0));
  CHECK(b.tensor(2, 2) == doctest::Approx(-0.5));
  CHECK(a.is_consistent());
  CHECK_FALSE(b.is_consistent());
}

TEST_CASE("is_consistent skips NaN components and flags |P| > 1") {
  PolarizationState s;
  s.tensor.setConstant(std::numeric_limits<double>::quiet_NaN());
  s.vector = {0.0, 0.0, 0.5};
  CHECK(s.is_consistent());
  s.vector = {0.0, 0.8, 0.8};
  CHECK_FALSE(s.is_consistent());
}
