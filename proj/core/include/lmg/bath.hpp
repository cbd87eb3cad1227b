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


#ifndef LMG_BATH_HPP
#define LMG_BATH_HPP

#include <optional>

#include "lmg/spin_algebra.hpp"
#include "lmg/types.hpp"

namespace lmg {

enum class TemperatureMode {
  kIntensive,  // temperature field is T
  kExtensive,  // temperature field is the rescaled T~ = T / S
};

/// Physical parameters of the spin plus Ohmic bath.
struct ModelParams {
  double lambda = 0.5;
  double gamma = 0.05;
  SpinQuantumNumber s = SpinQuantumNumber::from_twice(20);
  TemperatureMode temperature_mode = TemperatureMode::kExtensive;
  double temperature = 1.0;
  double omega_c = 10.0;
  /// Replaces the computed nu1 when set.
  std::optional<double> nu1_override;

  /// Throws InvalidParameter on gamma < 0, omega_c <= 0, T < 0 or
  /// non-finite fields.
  void validate() const;

  /// Bath temperature T in the units of the Hamiltonian (S T~ in extensive mode).
  double physical_temperature() const;
  /// beta = 1 / T; infinite at T = 0.
  double beta() const;
  /// beta~ = S beta.
  double beta_tilde() const;
};

/// Drude-cut Ohmic spectral density J(w) = (w / pi) wc^2 / (wc^2 + w^2).
double spectral_density(double omega, double omega_c);

/// Noise kernel eta(tau) = wc^2 exp(-wc tau) / 2.
double noise_kernel(double tau, double omega_c);

/// First moment of the decoherence kernel at bath temperature T:
/// nu1 = T / wc - [psi(beta wc / 2 pi + 1) - psi(1)] / pi.
/// Throws DomainError at T = 0.
double nu1(double temperature, double omega_c);

/// nu1 for a parameter set. In extensive mode the cutoff is taken to scale
/// with S alongside T, so the value depends on T~ and wc only.
double nu1(const ModelParams& params);

/// tau_B = max(1 / wc, beta / 2 pi).
double bath_correlation_time(const ModelParams& params);

/// Logs a warning and returns true when gamma * tau_B exceeds threshold.
bool warn_if_non_markovian(const ModelParams& params, double threshold = 0.1);

/// 2x2 dissipator coefficients in the {Sx, Sy} basis.
struct KappaMatrix {
  double kxx = 0.0;
  double kyy = 0.0;
  Complex kxy;
  Complex kyx;
  bool repaired = false;

  Eigen::Matrix2cd matrix() const;
  double determinant() const;
  /// Ascending.
  Eigen::Vector2d eigenvalues() const;
};

/// kappa = (gamma / 2S) [[4T, 2 nu1 - i], [2 nu1 + i, 0]], with kxx = 2 gamma T~
/// in extensive mode. With repair, kyy is raised to |kxy|^2 / kxx.
/// Throws InvalidParameter for S = 0, DomainError when repairing with kxx = 0.
KappaMatrix kappa_matrix(const ModelParams& params, bool repair = true);

/// Single jump operator L = sqrt(kxx) (Sx + (kyx / kxx) Sy) of a repaired kappa.
/// Throws ContractViolation if kappa is not repaired.
Matrix jump_operator(const SpinOperators& ops, const KappaMatrix& kappa);

/// Two-index dissipator sum_kl kappa_kl (S_k rho S_l - {S_l S_k, rho} / 2).
Matrix two_index_dissipator(const SpinOperators& ops, const KappaMatrix& kappa, const Matrix& rho);

}  // namespace lmg

#endif  // LMG_BATH_HPP
