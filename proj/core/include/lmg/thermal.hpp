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


#ifndef LMG_THERMAL_HPP
#define LMG_THERMAL_HPP

#include "lmg/spin_algebra.hpp"
#include "lmg/types.hpp"

namespace lmg {

/// rho = exp(-beta~ h) / Z with h = H / S.
struct GibbsState {
  double beta_tilde;
  Matrix rho;
  /// Partition function Tr exp(-beta~ h). At beta~ = infinity this is the
  /// number of (near-)degenerate ground states that were mixed.
  double z;
  /// log z, finite even where z itself over- or underflows.
  double log_z;
};

/// Gibbs state of the LMG Hamiltonian at rescaled inverse temperature
/// beta~ in [0, inf]. beta~ = inf returns the equal-weight mixture over
/// levels within 1e-10 of the ground energy. Throws InvalidParameter for
/// negative or NaN beta~ and for S = 0.
GibbsState gibbs_state(const SpinOperators& ops, double lambda, double beta_tilde);

/// Tr[rho A]. Logs a warning for non-Hermitian A and returns the complex
/// value; for Hermitian A an imaginary part above 1e-12 is a ContractViolation.
Complex gibbs_expectation(const GibbsState& state, const Matrix& a);

/// <h> in the Gibbs state.
double gibbs_energy_density(const SpinOperators& ops, double lambda, double beta_tilde);

/// Pure spin-coherent state |theta, phi><theta, phi| with
/// <S> = S (sin t cos p, sin t sin p, cos t).
Matrix coherent_state(const SpinOperators& ops, double theta, double phi);

/// <h> of the coherent state at (theta, phi = 0):
/// -(lambda / 2) [sin^2 t + cos^2 t / (2S)] - cos t.
double coherent_energy_density(SpinQuantumNumber s, double lambda, double theta);

/// Polar angle theta in [theta_min, pi] with coherent_energy_density = target,
/// where theta_min minimises the energy. Throws DomainError if the target is
/// outside the attainable range.
double coherent_theta_for_energy(SpinQuantumNumber s, double lambda, double target);

}  // namespace lmg

#endif  // LMG_THERMAL_HPP
