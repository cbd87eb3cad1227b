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


#include "lmg/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <spdlog/spdlog.h>

#include "lmg/errors.hpp"
#include "lmg/special_functions.hpp"

namespace lmg {

void ModelParams::validate() const {
  if (!std::isfinite(lambda)) throw InvalidParameter("lambda must be finite");
  if (!std::isfinite(gamma) || gamma < 0.0) throw InvalidParameter("gamma must be finite and >= 0");
  if (!std::isfinite(omega_c) || omega_c <= 0.0) throw InvalidParameter("omega_c must be positive");
  if (!std::isfinite(temperature) || temperature < 0.0) {
    throw InvalidParameter("temperature must be finite and >= 0");
  }
  if (nu1_override && !std::isfinite(*nu1_override)) throw InvalidParameter("nu1 override must be finite");
}

double ModelParams::physical_temperature() const {
  return temperature_mode == TemperatureMode::kExtensive ? s.value() * temperature : temperature;
}

double ModelParams::beta() const {
  const double t = physical_temperature();
  return t > 0.0 ? 1.0 / t : std::numeric_limits<double>::infinity();
}

double ModelParams::beta_tilde() const {
  if (temperature_mode == TemperatureMode::kExtensive) {
    return temperature > 0.0 ? 1.0 / temperature : std::numeric_limits<double>::infinity();
  }
  return s.value() * beta();
}

double spectral_density(double omega, double omega_c) {
  if (omega < 0.0) throw DomainError("spectral_density: omega must be >= 0");
  const double wc2 = omega_c * omega_c;
  return (omega / kPi) * wc2 / (wc2 + omega * omega);
}

double noise_kernel(double tau, double omega_c) {
  if (tau < 0.0) throw DomainError("noise_kernel: tau must be >= 0");
  return 0.5 * omega_c * omega_c * std::exp(-omega_c * tau);
}

double nu1(double temperature, double omega_c) {
  if (!(temperature > 0.0)) throw DomainError("nu1 diverges at zero temperature");
  if (!(omega_c > 0.0)) throw DomainError("nu1 needs omega_c > 0");
  const double x = omega_c / (2.0 * kPi * temperature);
  return temperature / omega_c - (digamma(x + 1.0) - digamma(1.0)) / kPi;
}

double nu1(const ModelParams& params) {
  if (params.nu1_override) return *params.nu1_override;
  // T -> S T~ together with wc -> S wc leaves nu1 a function of T~ / wc.
  return nu1(params.temperature, params.omega_c);
}

double bath_correlation_time(const ModelParams& params) {
  return std::max(1.0 / params.omega_c, params.beta() / (2.0 * kPi));
}

bool warn_if_non_markovian(const ModelParams& params, double threshold) {
  const double product = params.gamma * bath_correlation_time(params);
  if (product <= threshold) return false;
  spdlog::warn("gamma * tau_B = {:.3g} exceeds {:.3g}; Markov approximation is questionable", product, threshold);
  return true;
}

Eigen::Matrix2cd KappaMatrix::matrix() const {
  Eigen::Matrix2cd k;
  k << kxx, kxy, kyx, kyy;
  return k;
}

double KappaMatrix::determinant() const { return kxx * kyy - std::norm(kxy); }

Eigen::Vector2d KappaMatrix::eigenvalues() const {
  const double mean = 0.5 * (kxx + kyy);
  const double radius = std::hypot(0.5 * (kxx - kyy), std::abs(kxy));
  return {mean - radius, mean + radius};
}

KappaMatrix kappa_matrix(const ModelParams& params, bool repair) {
  params.validate();
  const double sv = params.s.value();
  if (sv == 0.0) throw InvalidParameter("kappa_matrix needs S > 0");
  const double pre = params.gamma / (2.0 * sv);
  const double n1 = nu1(params);

  KappaMatrix k;
  k.kxx = params.temperature_mode == TemperatureMode::kExtensive ? 2.0 * params.gamma * params.temperature
                                                                  : 4.0 * pre * params.temperature;
  k.kxy = pre * Complex(2.0 * n1, -1.0);
  k.kyx = std::conj(k.kxy);
  k.kyy = 0.0;
  if (repair) {
    if (!(k.kxx > 0.0)) {
      throw DomainError("cannot repair kappa with kxx = 0 (zero temperature or gamma = 0)");
    }
    k.kyy = std::norm(k.kxy) / k.kxx;
    k.repaired = true;
  }
  return k;
}

Matrix jump_operator(const SpinOperators& ops, const KappaMatrix& kappa) {
  if (!kappa.repaired) throw ContractViolation("jump_operator needs a repaired kappa matrix");
  return std::sqrt(kappa.kxx) * (ops.sx + (kappa.kyx / kappa.kxx) * ops.sy);
}

Matrix two_index_dissipator(const SpinOperators& ops, const KappaMatrix& kappa, const Matrix& rho) {
  const Matrix* s[2] = {&ops.sx, &ops.sy};
  const Eigen::Matrix2cd k = kappa.matrix();
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Matrix slk = (*s[b]) * (*s[a]);
      out += k(a, b) * ((*s[a]) * rho * (*s[b]) - 0.5 * (slk * rho + rho * slk));
    }
  }
  return out;
}

}  // namespace lmg
