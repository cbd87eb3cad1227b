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


#ifndef LMG_SEMICLASSICAL_HPP
#define LMG_SEMICLASSICAL_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace lmg {

/// Rescaled spin (x, y, z) = <S> / S, on the unit sphere.
struct ClassicalState {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double radius_squared() const noexcept { return x * x + y * y + z * z; }
};

/// x' = y, y' = (lambda z - 1) x - gamma z y, z' = -lambda x y + gamma y^2.
ClassicalState eom_rhs(const ClassicalState& state, double lambda, double gamma);

/// h = -(lambda / 2) x^2 - z.
double classical_energy(const ClassicalState& state, double lambda);

enum class ProjectionPolicy {
  kNever,
  /// Every 100 accepted steps, renormalise (x, y, z) if |r^2 - 1| > 1e-7.
  kOnDrift,
};

struct ClassicalOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  ProjectionPolicy projection = ProjectionPolicy::kOnDrift;
};

struct ClassicalTrajectory {
  std::vector<double> t;
  std::vector<ClassicalState> states;
  std::size_t projections = 0;
};

/// Integrates the equations of motion on a nondecreasing grid starting at or
/// after 0. Throws InvalidParameter if state0 is off the sphere by more than
/// 1e-9 and NumericError on integrator failure.
ClassicalTrajectory integrate_classical(const ClassicalState& state0, double lambda, double gamma,
                                        const std::vector<double>& t_grid, const ClassicalOptions& options = {});

/// Reduced description by energy h, x and its velocity.
struct EnergyState {
  double h = 0.0;
  double x = 0.0;
  double xdot = 0.0;
};

EnergyState to_energy_state(const ClassicalState& state, double lambda);

/// xdot^2 - [1 - (lambda x^2 / 2 + h)^2 - x^2]; zero on the sphere.
double energy_constraint_residual(const EnergyState& state, double lambda);

/// (h', x', x'') with h' = -gamma xdot^2 and
/// x'' = -(lambda^2 / 2) x^3 - (lambda h + 1) x + gamma xdot (lambda x^2 / 2 + h).
EnergyState energy_rhs(const EnergyState& state, double lambda, double gamma);

std::vector<EnergyState> integrate_energy_system(const EnergyState& state0, double lambda, double gamma,
                                                 const std::vector<double>& t_grid, double rtol = 1e-10,
                                                 double atol = 1e-12);

/// Lower edge of the rescaled spectrum: -1 for lambda <= 1,
/// -(lambda + 1 / lambda) / 2 above.
double ground_energy(double lambda);

struct EquilibriumExpectations {
  double x2;
  double z;
  double y;
};

/// (max{0, 1 - lambda^-2}, min{1 / lambda, 1}, 0).
EquilibriumExpectations equilibrium_expectations(double lambda);

enum class Stability { kStable, kUnstable, kSaddle, kNonHyperbolic };

struct FixedPoint {
  ClassicalState state;
  /// Eigenvalues of the flow linearised in the tangent plane.
  std::complex<double> eigenvalues[2];
  Stability stability;
};

/// All fixed points on the sphere, classified with hyperbolicity threshold
/// |Re| > 1e-10.
std::vector<FixedPoint> classify_fixed_points(double lambda, double gamma);

}  // namespace lmg

#endif  // LMG_SEMICLASSICAL_HPP
