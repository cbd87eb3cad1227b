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


#include "lmg/thermal.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <spdlog/spdlog.h>

#include "lmg/errors.hpp"

namespace lmg {

GibbsState gibbs_state(const SpinOperators& ops, double lambda, double beta_tilde) {
  if (std::isnan(beta_tilde) || beta_tilde < 0.0) {
    throw InvalidParameter("beta_tilde must lie in [0, inf]");
  }
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(rescaled_hamiltonian(ops, lambda));
  const Eigen::VectorXd& e = eig.eigenvalues();
  const Matrix& v = eig.eigenvectors();
  const double e_min = e.minCoeff();

  Eigen::VectorXd w(e.size());
  if (std::isinf(beta_tilde)) {
    for (Index i = 0; i < e.size(); ++i) w(i) = (e(i) - e_min < 1e-10) ? 1.0 : 0.0;
  } else {
    // Shifted by the ground energy so that no weight overflows.
    for (Index i = 0; i < e.size(); ++i) w(i) = std::exp(-beta_tilde * (e(i) - e_min));
  }
  const double shifted_z = w.sum();

  GibbsState g;
  g.beta_tilde = beta_tilde;
  g.rho = v * (w / shifted_z).cast<Complex>().asDiagonal() * v.adjoint();
  if (std::isinf(beta_tilde)) {
    g.z = shifted_z;
    g.log_z = std::log(shifted_z);
  } else {
    g.log_z = std::log(shifted_z) - beta_tilde * e_min;
    g.z = std::exp(g.log_z);
  }
  return g;
}

Complex gibbs_expectation(const GibbsState& state, const Matrix& a) {
  const Complex value = trace_product(state.rho, a);
  if (hermiticity_defect(a) > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    spdlog::warn("gibbs_expectation called with a non-Hermitian operator; returning a complex value");
    return value;
  }
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value))) {
    throw ContractViolation("Hermitian expectation has imaginary part " + std::to_string(value.imag()));
  }
  return {value.real(), 0.0};
}

double gibbs_energy_density(const SpinOperators& ops, double lambda, double beta_tilde) {
  return gibbs_expectation(gibbs_state(ops, lambda, beta_tilde), rescaled_hamiltonian(ops, lambda)).real();
}

Matrix coherent_state(const SpinOperators& ops, double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw InvalidParameter("coherent_state angles must be finite");
  const int two_s = ops.s.twice();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double log_fact_2s = std::lgamma(two_s + 1.0);
  Vector psi(ops.dim());
  for (int k = 0; k <= two_s; ++k) {
    // m = S - k, so S + m = 2S - k and S - m = k.
    const double m = ops.s.value() - k;
    const double log_binom = log_fact_2s - std::lgamma(k + 1.0) - std::lgamma(two_s - k + 1.0);
    const double magnitude = std::exp(0.5 * log_binom) * std::pow(c, two_s - k) * std::pow(s, k);
    psi(k) = magnitude * std::polar(1.0, -m * phi);
  }
  psi.normalize();
  return psi * psi.adjoint();
}

double coherent_energy_density(SpinQuantumNumber s, double lambda, double theta) {
  const double sv = s.value();
  if (sv == 0.0) throw InvalidParameter("coherent_energy_density needs S > 0");
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  return -0.5 * lambda * (st * st + ct * ct / (2.0 * sv)) - ct;
}

double coherent_theta_for_energy(SpinQuantumNumber s, double lambda, double target) {
  if (!std::isfinite(target)) throw InvalidParameter("target energy must be finite");
  auto f = [&](double theta) { return coherent_energy_density(s, lambda, theta); };
  const auto [theta_min, e_min] = boost::math::tools::brent_find_minima(f, 0.0, kPi, 52);
  const double e_max = f(kPi);
  if (target < e_min || target > e_max) {
    throw DomainError("target energy " + std::to_string(target) + " outside coherent-state range [" +
                      std::to_string(e_min) + ", " + std::to_string(e_max) + "]");
  }
  if (target == e_min) return theta_min;
  if (target == e_max) return kPi;
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve([&](double t) { return f(t) - target; }, theta_min, kPi,
                                                        boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (lo + hi);
}

}  // namespace lmg
