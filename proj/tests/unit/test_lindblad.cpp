// Copyright 2026 The lmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lmg/lindblad.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "lmg/errors.hpp"
#include "lmg/thermal.hpp"
#include "support/test_support.hpp"

namespace lmg {
namespace {

using testing_support::random_density;
using testing_support::random_matrix;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

ModelParams intensive(double lambda, double gamma, int twice_s) {
  ModelParams p;
  p.lambda = lambda;
  p.gamma = gamma;
  p.s = SpinQuantumNumber::from_twice(twice_s);
  p.temperature_mode = TemperatureMode::kIntensive;
  p.temperature = 1.0;
  p.omega_c = 10.0;
  return p;
}

ModelParams extensive(double lambda, double gamma, int twice_s, double ttilde) {
  ModelParams p = intensive(lambda, gamma, twice_s);
  p.temperature_mode = TemperatureMode::kExtensive;
  p.temperature = ttilde;
  return p;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

const LindbladOptions kJump{LindbladForm::kJumpOperator};

TEST(Lindbladian, ClosedSystemSpectrumIsEnergyDifferences) {
  const ModelParams p = intensive(1.3, 0.0, 4);
  const SpinOperators ops = build_spin_operators(p.s);
  const Superoperator l = build_lindbladian(ops, p);
  const Eigen::VectorXd e = Eigen::SelfAdjointEigenSolver<Matrix>(lmg_hamiltonian(ops, p.lambda)).eigenvalues();
  std::vector<double> expected;
  for (Index m = 0; m < e.size(); ++m) {
    for (Index n = 0; n < e.size(); ++n) expected.push_back(e(m) - e(n));
  }
  std::vector<double> got;
  for (const Complex& z : liouvillian_spectrum(l)) {
    EXPECT_NEAR(z.real(), 0.0, 1e-10);
    got.push_back(z.imag());
  }
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-10);
  EXPECT_NEAR(spectral_gap(l).gap, 0.0, 1e-10);
}

TEST(Lindbladian, TraceAndHermiticityPreservation) {
  std::mt19937_64 rng(testing_support::kSeed);
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    for (const ModelParams& p : {intensive(0.5, 0.1, 3), extensive(2.0, 0.05, 6, 0.5)}) {
      const SpinOperators ops = build_spin_operators(p.s);
      const Superoperator l = build_lindbladian(ops, p, opt);
      const Index d = ops.dim();
      EXPECT_LT(std::abs(l.apply(Matrix::Identity(d, d) / double(d)).trace()), 1e-14);
      // (vec I)^dagger L = 0 row condition.
      const Vector row = vectorize(Matrix::Identity(d, d)).adjoint() * l.matrix();
      EXPECT_LT(row.cwiseAbs().maxCoeff(), 1e-10);
      for (int trial = 0; trial < 5; ++trial) {
        const Matrix x = random_matrix(d, rng);
        EXPECT_LT(max_abs(l.apply(x).adjoint() - l.apply(x.adjoint())), 1e-10);
      }
    }
  }
}

TEST(Lindbladian, AdjointDuality) {
  std::mt19937_64 rng(testing_support::kSeed + 1);
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    const ModelParams p = intensive(0.7, 0.08, 4);  // S = 2
    const SpinOperators ops = build_spin_operators(p.s);
    const Superoperator l = build_lindbladian(ops, p, opt);
    const Superoperator ladj = build_adjoint_lindbladian(ops, p, opt);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = random_matrix(ops.dim(), rng);
      const Matrix rho = random_density(ops.dim(), rng);
      const Complex lhs = trace_product(a, l.apply(rho));
      const Complex rhs = trace_product(ladj.apply(a), rho);
      EXPECT_LT(std::abs(lhs - rhs), 1e-12 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST(Lindbladian, AdjointIsConjugateTransposeElementwise) {
  const ModelParams p = extensive(2.0, 0.1, 3, 1.0);  // S = 3/2
  const SpinOperators ops = build_spin_operators(p.s);
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    const Matrix l = build_lindbladian(ops, p, opt).matrix();
    const Matrix ladj = build_adjoint_lindbladian(ops, p, opt).matrix();
    EXPECT_LT(max_abs(ladj - l.adjoint()), 1e-12);
  }
}

TEST(Lindbladian, AdjointIsUnital) {
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    const ModelParams p = intensive(2.0, 0.1, 7);
    const SpinOperators ops = build_spin_operators(p.s);
    EXPECT_LT(max_abs(build_adjoint_lindbladian(ops, p, opt).apply(ops.identity)), 1e-10);
  }
  const ModelParams closed = intensive(2.0, 0.0, 7);
  const SpinOperators ops = build_spin_operators(closed.s);
  EXPECT_LT(max_abs(build_adjoint_lindbladian(ops, closed).apply(lmg_hamiltonian(ops, 2.0))), 1e-12);
}

TEST(Lindbladian, JumpFormIsGksl) {
  std::mt19937_64 rng(testing_support::kSeed + 2);
  const ModelParams p = intensive(0.5, 0.1, 5);
  const SpinOperators ops = build_spin_operators(p.s);
  const KappaMatrix k = kappa_matrix(p);
  const Matrix lj = jump_operator(ops, k);
  const Matrix h = lmg_hamiltonian(ops, p.lambda) +
                   (p.gamma / (4.0 * p.s.value())) * anticommutator(ops.sx, ops.sy);
  const Superoperator l = build_lindbladian(ops, p, kJump);
  const Matrix rho = random_density(ops.dim(), rng);
  const Matrix expected = -kI * commutator(h, rho) + lj * rho * lj.adjoint() -
                          0.5 * anticommutator(lj.adjoint() * lj, rho);
  EXPECT_LT(max_abs(l.apply(rho) - expected), 1e-12);
}

TEST(Lindbladian, FiveTermLiteralForm) {
  std::mt19937_64 rng(testing_support::kSeed + 3);
  const ModelParams p = extensive(2.0, 0.1, 4, 0.7);
  const SpinOperators ops = build_spin_operators(p.s);
  const KappaMatrix k = kappa_matrix(p);
  const Matrix h = lmg_hamiltonian(ops, p.lambda);
  const Matrix rho = random_matrix(ops.dim(), rng);
  const Matrix &sx = ops.sx, &sy = ops.sy;
  const Matrix expected = kI * commutator(rho, h) - kI * k.kyx.imag() * commutator(sx, anticommutator(sy, rho)) -
                          0.5 * k.kxx * commutator(sx, commutator(sx, rho)) -
                          k.kyy * commutator(sy, commutator(sy, rho)) +
                          2.0 * k.kxy.real() * commutator(sy, commutator(sx, rho));
  EXPECT_LT(max_abs(build_lindbladian(ops, p).apply(rho) - expected), 1e-12);
}

// Smallest eigenvalue of the Choi matrix of l projected off the maximally
// entangled vector; non-negative exactly when l generates a CP semigroup.
double conditional_choi_minimum(const Superoperator& l, Index d) {
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      const Matrix out = l.apply(e);
      for (Index k = 0; k < d; ++k) {
        for (Index m = 0; m < d; ++m) choi(i * d + k, j * d + m) = out(k, m);
      }
    }
  }
  Vector omega = Vector::Zero(d * d);
  for (Index i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const Matrix proj = Matrix::Identity(d * d, d * d) - omega * omega.adjoint();
  Matrix m = proj * choi * proj;
  m = (0.5 * (m + m.adjoint())).eval();
  return Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues().minCoeff();
}

TEST(Lindbladian, FiveTermPositivityWindow) {
  const double edge = 1.0 / (2.0 * std::sqrt(2.0));
  for (int twice : {1, 2, 4}) {
    for (double ttilde : {0.5, 3.0}) {
      ModelParams p = extensive(0.7, 0.1, twice, ttilde);
      const SpinOperators ops = build_spin_operators(p.s);
      for (double n1 : {0.0, 0.2, -0.35, 0.353}) {
        p.nu1_override = n1;
        EXPECT_GT(conditional_choi_minimum(build_lindbladian(ops, p), ops.dim()), -1e-12) << n1;
      }
      for (double n1 : {edge + 1e-3, -0.5}) {
        p.nu1_override = n1;
        EXPECT_LT(conditional_choi_minimum(build_lindbladian(ops, p), ops.dim()), -1e-6) << n1;
        LindbladOptions jump;
        jump.form = LindbladForm::kJumpOperator;
        EXPECT_GT(conditional_choi_minimum(build_lindbladian(ops, p, jump), ops.dim()), -1e-12) << n1;
      }
    }
  }
}

TEST(Lindbladian, BuildCap) {
  const ModelParams p = intensive(0.5, 0.1, 202);  // d^2 = 41209
  const SpinOperators ops = build_spin_operators(p.s);
  EXPECT_THROW(build_lindbladian(ops, p), ResourceError);
  LindbladOptions small;
  small.max_liouville_dim = 100;
  EXPECT_THROW(build_lindbladian(build_spin_operators(5.0), intensive(0.5, 0.1, 10), small), ResourceError);
}

TEST(Evolution, InitialTimeIsExact) {
  std::mt19937_64 rng(testing_support::kSeed + 4);
  const ModelParams p = intensive(0.5, 0.1, 4);
  const SpinOperators ops = build_spin_operators(p.s);
  const Matrix rho0 = random_density(ops.dim(), rng);
  const auto states = evolve_state(build_lindbladian(ops, p), rho0, {0.0, 1.0});
  EXPECT_EQ(max_abs(states[0] - rho0), 0.0);
  EXPECT_EQ(max_abs(EigenPropagator(build_lindbladian(ops, p)).propagate(rho0, 0.0) - rho0), 0.0);
}

TEST(Evolution, ClosedSystemIsUnitary) {
  std::mt19937_64 rng(testing_support::kSeed + 5);
  const ModelParams p = intensive(1.5, 0.0, 5);
  const SpinOperators ops = build_spin_operators(p.s);
  const Matrix h = lmg_hamiltonian(ops, p.lambda);
  const Matrix rho0 = random_density(ops.dim(), rng);
  const auto grid = linspace(0.0, 10.0, 11);
  const auto states = evolve_state(build_lindbladian(ops, p), rho0, grid);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vector phases = (-kI * grid[i] * es.eigenvalues().cast<Complex>()).array().exp();
    const Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    EXPECT_LT(max_abs(states[i] - u * rho0 * u.adjoint()), 1e-8) << grid[i];
  }
}

TEST(Evolution, EigenprojectorIsStationaryWithoutBath) {
  const ModelParams p = intensive(0.8, 0.0, 2);
  const SpinOperators ops = build_spin_operators(p.s);
  Eigen::SelfAdjointEigenSolver<Matrix> es(lmg_hamiltonian(ops, p.lambda));
  const Matrix proj = es.eigenvectors().col(1) * es.eigenvectors().col(1).adjoint();
  for (const Matrix& rho : evolve_state(build_lindbladian(ops, p), proj, linspace(0.0, 50.0, 6))) {
    EXPECT_LT(max_abs(rho - proj), 1e-9);
  }
}

TEST(Evolution, DensityInvariantsAlongTrajectory) {
  // nu1 = -0.327 at T = 1, wc = 10 lies inside the window |nu1| <= 1/(2 sqrt 2)
  // where the five-term generator is completely positive.
  const ModelParams p = intensive(0.5, 0.1, 8);
  const SpinOperators ops = build_spin_operators(p.s);
  const Matrix rho0 = coherent_state(ops, 2.0, 0.3);
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    for (const Matrix& rho : evolve_state(build_lindbladian(ops, p, opt), rho0, linspace(0.0, 100.0, 41))) {
      const DensityDiagnostics d = diagnose_density(rho);
      EXPECT_LT(d.hermiticity_defect, 1e-12);
      EXPECT_LT(d.trace_error, 1e-10);
      EXPECT_GE(d.min_eigenvalue, -1e-8);
      EXPECT_LE(d.purity, 1.0 + 1e-10);
    }
  }
}

TEST(Evolution, ObservableDualityAtRandomTimes) {
  std::mt19937_64 rng(testing_support::kSeed + 6);
  std::uniform_real_distribution<double> u(0.0, 40.0);
  std::vector<double> grid(10);
  for (double& t : grid) t = u(rng);
  std::sort(grid.begin(), grid.end());
  const ModelParams p = extensive(2.0, 0.1, 3, 0.5);
  const SpinOperators ops = build_spin_operators(p.s);
  const Matrix rho0 = random_density(ops.dim(), rng);
  const Matrix a0 = testing_support::random_hermitian(ops.dim(), rng);
  const auto rhos = evolve_state(build_lindbladian(ops, p), rho0, grid);
  const auto as = evolve_observable(build_adjoint_lindbladian(ops, p), a0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_LT(std::abs(trace_product(as[i], rho0) - trace_product(a0, rhos[i])), 1e-8) << grid[i];
  }
}

TEST(Evolution, IdentityObservableIsConstant) {
  const ModelParams p = intensive(2.0, 0.1, 6);
  const SpinOperators ops = build_spin_operators(p.s);
  for (const Matrix& a : evolve_observable(build_adjoint_lindbladian(ops, p), ops.identity, linspace(0, 30, 7))) {
    EXPECT_LT(max_abs(a - ops.identity), 1e-8);  // integrator tolerance over t = 30
  }
}

TEST(Evolution, EnergyDecaysLateForHighStart) {
  const ModelParams p = intensive(0.5, 0.1, 20);
  const SpinOperators ops = build_spin_operators(p.s);
  const Matrix h = rescaled_hamiltonian(ops, p.lambda);
  const Matrix rho0 = coherent_state(ops, 2.5, 0.0);
  const auto grid = linspace(20.0, 200.0, 37);
  const auto energies = expectation_series(evolve_state(build_lindbladian(ops, p), rho0, grid), h);
  for (std::size_t i = 1; i < energies.size(); ++i) EXPECT_LE(energies[i], energies[i - 1] + 1e-9) << grid[i];
}

TEST(Evolution, StationaryEnergyApproachesGibbsWithSpin) {
  // The stationary state is not exactly Gibbs at finite S; the gap closes roughly like 1/S^2.
  double previous = 1.0;
  for (int twice : {4, 8, 16, 40}) {
    ModelParams p = extensive(2.0, 0.1, twice, 0.5);
    p.omega_c = 20.0;
    const SpinOperators ops = build_spin_operators(p.s);
    const Matrix h = rescaled_hamiltonian(ops, p.lambda);
    const double e = trace_product(stationary_state(build_lindbladian(ops, p)), h).real();
    const double gap = std::abs(e - gibbs_energy_density(ops, p.lambda, p.beta_tilde()));
    EXPECT_LT(gap, previous) << twice;
    previous = gap;
  }
  EXPECT_LT(previous, 5e-3);
}

TEST(Evolution, EigenPropagatorMatchesIntegrator) {
  std::mt19937_64 rng(testing_support::kSeed + 7);
  const ModelParams p = extensive(0.5, 0.05, 6, 2.0);
  const SpinOperators ops = build_spin_operators(p.s);
  const Superoperator l = build_lindbladian(ops, p);
  const Matrix rho0 = random_density(ops.dim(), rng);
  const auto grid = linspace(0.0, 60.0, 7);
  const auto a = evolve_state(l, rho0, grid);
  const auto b = EigenPropagator(l).propagate(rho0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_LT(max_abs(a[i] - b[i]), 1e-7) << grid[i];
}

TEST(Spectrum, StationaryEigenvalueAndStability) {
  for (const LindbladOptions& opt : {LindbladOptions{}, kJump}) {
    const ModelParams p = extensive(2.0, 0.1, 8, 1.0);
    const SpinOperators ops = build_spin_operators(p.s);
    const Superoperator l = build_lindbladian(ops, p, opt);
    const auto spectrum = liouvillian_spectrum(l);
    const double norm = l.matrix().norm();
    EXPECT_LE(std::abs(spectrum.front()), 1e-8 * norm);
    for (const Complex& z : spectrum) EXPECT_LE(z.real(), 1e-8);
    // Closed under conjugation.
    for (const Complex& z : spectrum) {
      const double nearest = std::abs(*std::min_element(spectrum.begin(), spectrum.end(), [&](Complex a, Complex b) {
        return std::abs(a - std::conj(z)) < std::abs(b - std::conj(z));
      }) - std::conj(z));
      EXPECT_LT(nearest, 1e-8);
    }
    const SpectralGap g = spectral_gap(l);
    EXPECT_GT(g.gap, 0.0);
    EXPECT_NEAR(g.gap, -g.lambda1.real(), 0.0);
  }
}

TEST(Spectrum, SortedByDescendingRealPart) {
  const ModelParams p = intensive(0.5, 0.1, 5);
  const auto s = liouvillian_spectrum(build_lindbladian(build_spin_operators(p.s), p), 10);
  ASSERT_EQ(s.size(), 10u);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GE(s[i - 1].real(), s[i].real());
}

TEST(Spectrum, StationaryStateMatchesLongTimeLimit) {
  const ModelParams p = extensive(0.5, 0.1, 6, 1.0);
  const SpinOperators ops = build_spin_operators(p.s);
  const Superoperator l = build_lindbladian(ops, p);
  const Matrix ss = stationary_state(l);
  EXPECT_NEAR(std::abs(ss.trace() - 1.0), 0.0, 1e-12);
  EXPECT_LT(max_abs(l.apply(ss)), 1e-12);
  const Matrix late = EigenPropagator(l).propagate(coherent_state(ops, 2.0, 0.0), 3000.0);
  EXPECT_LT(max_abs(late - ss), 1e-4);
}

TEST(Stationarity, InfiniteTemperatureResidual) {
  // L(I) reduces to the anticommutator term -i Im(kyx) [Sx, {Sy, I}] = (gamma / S) Sz,
  // so r(0) = gamma sqrt((S + 1) / (3 S)) rather than zero.
  for (int twice : {2, 10, 40}) {
    const ModelParams p = extensive(0.5, 0.1, twice, 1.0);
    const SpinOperators ops = build_spin_operators(p.s);
    const double s = p.s.value();
    EXPECT_LT(max_abs(build_lindbladian(ops, p).apply(ops.identity) - (p.gamma / s) * ops.sz), 1e-14 * s);
    EXPECT_NEAR(stationarity_residual(ops, p, 0.0), p.gamma * std::sqrt((s + 1.0) / (3.0 * s)), 1e-12);
  }
}

TEST(Stationarity, ResidualHalvesWithSpin) {
  for (double lambda : {0.5, 2.0}) {
    double previous = 0.0;
    for (int twice : {20, 40, 80}) {
      const ModelParams p = extensive(lambda, 0.05, twice, 1.0);
      const double r = stationarity_residual(build_spin_operators(p.s), p, 2.0);
      if (previous > 0.0) {
        EXPECT_LT(r / previous, 0.7) << lambda << " S=" << twice / 2;
        EXPECT_GT(r / previous, 0.3) << lambda << " S=" << twice / 2;
      }
      previous = r;
    }
  }
}

TEST(Stationarity, RejectsIntensiveMode) {
  const ModelParams p = intensive(0.5, 0.1, 4);
  EXPECT_THROW(stationarity_residual(build_spin_operators(p.s), p, 1.0), InvalidParameter);
}

}  // namespace
}  // namespace lmg
