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


#ifndef LMG_LINDBLAD_HPP
#define LMG_LINDBLAD_HPP

#include <vector>

#include "lmg/bath.hpp"
#include "lmg/spin_algebra.hpp"
#include "lmg/superoperator.hpp"
#include "lmg/types.hpp"

namespace lmg {

/// Default cap on d^2 for building a Lindbladian (S <= 100).
inline constexpr Index kLiouvilleBuildCap = 40401;
/// Largest d^2 for which EigenPropagator diagonalises the generator.
inline constexpr Index kEigenPropagatorCap = 4096;

enum class LindbladForm {
  /// The five-term Born-Markov generator with the repaired kyy:
  /// i[., H] - i Im(kyx) [Sx, {Sy, .}] - (kxx/2) [Sx, [Sx, .]]
  ///   - (|kxy|^2 / kxx) [Sy, [Sy, .]] + 2 Re(kxy) [Sy, [Sx, .]].
  /// Completely positive only while |nu1| <= 1 / (2 sqrt 2).
  kFiveTerm,
  /// GKSL form with the single jump operator of the repaired kappa,
  /// -i[H + (gamma/4S){Sx, Sy}, .] + L . L^dagger - {L^dagger L, .}/2.
  /// Completely positive for every parameter set.
  kJumpOperator,
};

struct LindbladOptions {
  LindbladForm form = LindbladForm::kFiveTerm;
  Index max_liouville_dim = kLiouvilleBuildCap;
};

/// Lindbladian of the LMG spin coupled to the Ohmic bath. gamma = 0 gives the
/// Hamiltonian Liouvillian i[., H]. Throws ResourceError when (2S+1)^2 exceeds
/// the cap, DomainError when kappa cannot be repaired (T = 0 with gamma > 0).
Superoperator build_lindbladian(const SpinOperators& ops, const ModelParams& params,
                                const LindbladOptions& options = {});

/// Heisenberg-picture generator, built term by term from its own formula
/// (for kJumpOperator, the Hilbert-Schmidt adjoint of the generator).
Superoperator build_adjoint_lindbladian(const SpinOperators& ops, const ModelParams& params,
                                        const LindbladOptions& options = {});

struct EvolutionOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
};

/// rho(t) = exp(t L) rho0 on a nondecreasing grid starting at or after 0,
/// by adaptive Dormand-Prince 5(4) with dense output. Throws NumericError
/// with the last reached time on integrator failure.
std::vector<Matrix> evolve_state(const Superoperator& generator, const Matrix& rho0, const std::vector<double>& t_grid,
                                 const EvolutionOptions& options = {});

/// A(t) = exp(t L^dagger) A0; same integrator as evolve_state.
std::vector<Matrix> evolve_observable(const Superoperator& adjoint_generator, const Matrix& a0,
                                      const std::vector<double>& t_grid, const EvolutionOptions& options = {});

/// Real part of Tr[rho_i A] for each state.
std::vector<double> expectation_series(const std::vector<Matrix>& states, const Matrix& a);

/// Exact propagation by eigendecomposition of the generator, one
/// superparity block at a time. Worth it when several initial states share
/// a generator. Throws ResourceError above kEigenPropagatorCap.
class EigenPropagator {
 public:
  explicit EigenPropagator(const Superoperator& generator);

  Index dim() const noexcept { return dim_; }
  Matrix propagate(const Matrix& rho0, double t) const;
  std::vector<Matrix> propagate(const Matrix& rho0, const std::vector<double>& t_grid) const;

 private:
  struct Block {
    std::vector<Index> indices;
    Vector values;
    Matrix vectors;
    Eigen::PartialPivLU<Matrix> lu;
  };
  Index dim_;
  std::vector<Block> blocks_;
};

/// Eigenvalues sorted by descending real part (ties by ascending imaginary
/// part); count <= 0 returns all of them. Dense, so limited to
/// kDenseLiouvilleCap. The generator is split into its superparity blocks
/// when it has that symmetry.
std::vector<Complex> liouvillian_spectrum(const Superoperator& generator, Index count = 0);

struct SpectralGap {
  Complex lambda0;
  Complex lambda1;
  /// -Re lambda1.
  double gap;
};

/// lambda0 is the eigenvalue of smallest modulus; lambda1 the largest real
/// part among the rest. Throws NumericError if lambda0 is not also a
/// largest-real-part eigenvalue to 1e-8 times the generator norm.
SpectralGap spectral_gap(const Superoperator& generator);

/// Normalised solution of L rho = 0, by sparse LU with the trace condition
/// replacing one redundant row.
Matrix stationary_state(const Superoperator& generator);

/// r = ||L exp(-beta~ h)||_F / ||exp(-beta~ h)||_F for the extensive-temperature
/// Lindbladian at T~ = 1 / beta~ (the temperature in params is used only
/// for beta~ = 0). Throws InvalidParameter in intensive mode.
double stationarity_residual(const SpinOperators& ops, const ModelParams& params, double beta_tilde,
                             const LindbladOptions& options = {});

struct DensityDiagnostics {
  double hermiticity_defect;
  double trace_error;
  double min_eigenvalue;
  double purity;
};

DensityDiagnostics diagnose_density(const Matrix& rho);

}  // namespace lmg

#endif  // LMG_LINDBLAD_HPP
