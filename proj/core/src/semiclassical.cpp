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


#include "lmg/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <Eigen/Dense>

#include "detail/ode_driver.hpp"
#include "lmg/errors.hpp"

namespace lmg {
namespace {

constexpr double kHyperbolicity = 1e-10;
constexpr double kDriftThreshold = 1e-7;
constexpr std::size_t kProjectionInterval = 100;

}  // namespace

ClassicalState eom_rhs(const ClassicalState& s, double lambda, double gamma) {
  return {s.y, (lambda * s.z - 1.0) * s.x - gamma * s.z * s.y, -lambda * s.x * s.y + gamma * s.y * s.y};
}

double classical_energy(const ClassicalState& s, double lambda) { return -0.5 * lambda * s.x * s.x - s.z; }

ClassicalTrajectory integrate_classical(const ClassicalState& state0, double lambda, double gamma,
                                        const std::vector<double>& t_grid, const ClassicalOptions& options) {
  if (std::abs(state0.radius_squared() - 1.0) > 1e-9) {
    throw InvalidParameter("initial classical state must lie on the unit sphere");
  }
  auto rhs = [lambda, gamma](const detail::OdeState& v, detail::OdeState& dv, double) {
    const ClassicalState d = eom_rhs({v[0], v[1], v[2]}, lambda, gamma);
    dv[0] = d.x;
    dv[1] = d.y;
    dv[2] = d.z;
  };
  ClassicalTrajectory out;
  std::size_t steps = 0;
  auto project = [&](detail::OdeState& v, double) {
    if (options.projection == ProjectionPolicy::kNever || ++steps % kProjectionInterval != 0) return false;
    const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (std::abs(r2 - 1.0) <= kDriftThreshold) return false;
    const double r = std::sqrt(r2);
    for (double& c : v) c /= r;
    ++out.projections;
    return true;
  };
  detail::OdeOptions ode;
  ode.rtol = options.rtol;
  ode.atol = options.atol;
  const auto states = detail::integrate_on_grid(rhs, {state0.x, state0.y, state0.z}, t_grid, ode, 0.0, project);
  out.t = t_grid;
  out.states.reserve(states.size());
  for (const auto& v : states) out.states.push_back({v[0], v[1], v[2]});
  return out;
}

EnergyState to_energy_state(const ClassicalState& s, double lambda) { return {classical_energy(s, lambda), s.x, s.y}; }

double energy_constraint_residual(const EnergyState& s, double lambda) {
  const double w = 0.5 * lambda * s.x * s.x + s.h;
  return s.xdot * s.xdot - (1.0 - w * w - s.x * s.x);
}

EnergyState energy_rhs(const EnergyState& s, double lambda, double gamma) {
  const double xddot = -0.5 * lambda * lambda * s.x * s.x * s.x - (lambda * s.h + 1.0) * s.x +
                       gamma * s.xdot * (0.5 * lambda * s.x * s.x + s.h);
  return {-gamma * s.xdot * s.xdot, s.xdot, xddot};
}

std::vector<EnergyState> integrate_energy_system(const EnergyState& state0, double lambda, double gamma,
                                                 const std::vector<double>& t_grid, double rtol, double atol) {
  auto rhs = [lambda, gamma](const detail::OdeState& v, detail::OdeState& dv, double) {
    const EnergyState d = energy_rhs({v[0], v[1], v[2]}, lambda, gamma);
    dv[0] = d.h;
    dv[1] = d.x;
    dv[2] = d.xdot;
  };
  detail::OdeOptions ode;
  ode.rtol = rtol;
  ode.atol = atol;
  const auto states = detail::integrate_on_grid(rhs, {state0.h, state0.x, state0.xdot}, t_grid, ode);
  std::vector<EnergyState> out;
  out.reserve(states.size());
  for (const auto& v : states) out.push_back({v[0], v[1], v[2]});
  return out;
}

double ground_energy(double lambda) { return lambda <= 1.0 ? -1.0 : -0.5 * (lambda + 1.0 / lambda); }

EquilibriumExpectations equilibrium_expectations(double lambda) {
  if (lambda <= 1.0) return {0.0, 1.0, 0.0};
  return {1.0 - 1.0 / (lambda * lambda), 1.0 / lambda, 0.0};
}

std::vector<FixedPoint> classify_fixed_points(double lambda, double gamma) {
  std::vector<ClassicalState> points = {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}};
  if (std::abs(lambda) > 1.0) {
    const double z = 1.0 / lambda;
    const double x = std::sqrt(1.0 - z * z);
    points.push_back({x, 0.0, z});
    points.push_back({-x, 0.0, z});
  }

  std::vector<FixedPoint> out;
  for (const ClassicalState& p : points) {
    Eigen::Matrix3d jac;
    jac << 0.0, 1.0, 0.0,
        lambda * p.z - 1.0, -gamma * p.z, lambda * p.x - gamma * p.y,
        -lambda * p.y, -lambda * p.x + 2.0 * gamma * p.y, 0.0;
    // Orthonormal tangent basis at p: Householder complement of the normal.
    const Eigen::Vector3d n(p.x, p.y, p.z);
    Eigen::Matrix3d q = n.householderQr().householderQ();
    const Eigen::Matrix<double, 3, 2> basis = q.rightCols<2>();
    const Eigen::Matrix2d reduced = basis.transpose() * jac * basis;
    const Eigen::Vector2cd ev = reduced.eigenvalues();

    FixedPoint fp{p, {ev(0), ev(1)}, Stability::kNonHyperbolic};
    const double r0 = ev(0).real();
    const double r1 = ev(1).real();
    if (std::abs(r0) > kHyperbolicity && std::abs(r1) > kHyperbolicity) {
      if (r0 < 0.0 && r1 < 0.0) {
        fp.stability = Stability::kStable;
      } else if (r0 > 0.0 && r1 > 0.0) {
        fp.stability = Stability::kUnstable;
      } else {
        fp.stability = Stability::kSaddle;
      }
    }
    out.push_back(fp);
  }
  return out;
}

}  // namespace lmg
