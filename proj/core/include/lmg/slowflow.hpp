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


#ifndef LMG_SLOWFLOW_HPP
#define LMG_SLOWFLOW_HPP

#include <vector>

namespace lmg {

/// Parameters of the leading-order fast oscillation x0 = a cn(Omega tau + u | k^2)
/// at slow energy h0.
struct SlowFlowState {
  double h0;
  double lambda;
  double a2;
  /// Omega^2 = a^2 lambda^2 / 2 + h0 lambda + 1 = sqrt(lambda^2 + 2 h0 lambda + 1).
  double omega;
  double k2;
  /// 1 - k^2, evaluated without cancellation near the separatrix.
  double one_minus_k2;
  /// Phase constant of the fast solution. Averaging removes it, so it is
  /// never evolved; it only matters when reconstructing x0.
  double u = 0.0;
};

/// a^2, Omega and k^2 at energy h0 in [eps_g(lambda), 1]. Throws DomainError
/// naming eps_g outside that range (1e-12 slack is clamped).
SlowFlowState elliptic_parameters(double h0, double lambda);

/// Period of x0 in the fast time: 4K(k^2)/Omega for k^2 < 1, +infinity at
/// k^2 = 1, 2K(1/k^2)/(Omega k) for k^2 > 1.
double oscillation_period(const SlowFlowState& state);

/// x0(tau) = a cn(Omega tau + u | k^2).
double fast_solution(const SlowFlowState& state, double tau);

/// Period average A(h0) of (d x0 / d tau)^2, so that dh0/ds = -A(h0) with s = gamma t.
/// Zero at a^2 = 0 and within 1e-12 of k^2 = 1.
double dissipation_A(double h0, double lambda);

/// Integrates d eps / ds = -A(eps) on a nondecreasing s grid starting at 0.
/// Starts above -1 never cross -1; starts below -1 (lambda > 1) stay above
/// eps_g.
std::vector<double> eigenvalue_flow(double eps0, double lambda, const std::vector<double>& s_grid);

/// Near-equilibrium decay rate in units of gamma: 1 for lambda < 1, 4/3 at
/// lambda = 1, 1/lambda above.
double dissipation_rate(double lambda);

struct TailFit {
  /// Fitted decay rate in 1/time.
  double rate;
  /// rate / gamma.
  double rate_over_gamma;
  double amplitude;
  /// Mean of h - target - amplitude exp(-rate t) over the series.
  double offset;
  double r_squared;
};

/// Least-squares fit of log|h - target| against t. Throws FitQualityError if
/// any |h - target| is >= 0.1 or zero, or if R^2 < min_r_squared.
TailFit exponential_tail_to(const std::vector<double>& t, const std::vector<double>& h, double target, double gamma,
                         double min_r_squared = 0.999);

/// Same with target eps_g(lambda).
TailFit exponential_tail(const std::vector<double>& t, const std::vector<double>& h, double lambda, double gamma);

}  // namespace lmg

#endif  // LMG_SLOWFLOW_HPP
