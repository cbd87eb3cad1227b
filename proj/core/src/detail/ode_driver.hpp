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


#ifndef LMG_DETAIL_ODE_DRIVER_HPP
#define LMG_DETAIL_ODE_DRIVER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "lmg/errors.hpp"

namespace lmg::detail {

using OdeState = std::vector<double>;

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0 picks a small fraction of the span
  std::size_t max_steps = 50'000'000;
};

/// Checks that grid is non-empty, finite, nondecreasing and starts at or after t0.
inline void validate_grid(const std::vector<double>& grid, double t0) {
  if (grid.empty()) throw InvalidParameter("time grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw InvalidParameter("time grid contains a non-finite value");
    if (i == 0 && grid[i] < t0) throw InvalidParameter("time grid must start at or after the initial time");
    if (i > 0 && grid[i] < grid[i - 1]) throw InvalidParameter("time grid must be nondecreasing");
  }
}

struct NoPostStep {
  bool operator()(OdeState&, double) const { return false; }
};

/// Integrates dx/dt = system(x, t) with Dormand-Prince 5(4) and dense output,
/// returning the state at every grid time. post_step may modify the state
/// after each accepted step; returning true restarts the stepper there.
/// Failures raise NumericError carrying the last time that was reached.
template <class System, class PostStep = NoPostStep>
std::vector<OdeState> integrate_on_grid(System system, const OdeState& x0, const std::vector<double>& grid,
                                        const OdeOptions& opts, double t0 = 0.0, PostStep post_step = {}) {
  namespace odeint = boost::numeric::odeint;
  validate_grid(grid, t0);

  std::vector<OdeState> out;
  out.reserve(grid.size());
  std::size_t i = 0;
  while (i < grid.size() && grid[i] == t0) {
    out.push_back(x0);
    ++i;
  }
  if (i == grid.size()) return out;

  const double span = grid.back() - t0;
  const double dt0 = opts.initial_step > 0.0 ? opts.initial_step : std::min(1e-3, 1e-4 * span);
  auto stepper = odeint::make_dense_output(opts.atol, opts.rtol, odeint::runge_kutta_dopri5<OdeState>());
  stepper.initialize(x0, t0, dt0);

  double last_good = t0;
  std::size_t steps = 0;
  OdeState buffer(x0.size());
  while (i < grid.size()) {
    try {
      stepper.do_step(system);
    } catch (const odeint::step_adjustment_error& e) {
      throw NumericError(std::string("step size control failed: ") + e.what(), last_good);
    }
    const double t = stepper.current_time();
    const OdeState& x = stepper.current_state();
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
      throw NumericError("integration produced a non-finite state", last_good);
    }
    if (stepper.current_time_step() < 1e-14 * std::max(1.0, std::abs(t))) {
      throw NumericError("integration step size underflow", last_good);
    }
    if (++steps > opts.max_steps) throw NumericError("integration exceeded the step budget", last_good);
    last_good = t;

    while (i < grid.size() && grid[i] <= t) {
      stepper.calc_state(grid[i], buffer);
      out.push_back(buffer);
      ++i;
    }
    if constexpr (!std::is_same_v<PostStep, NoPostStep>) {
      OdeState modified = x;
      if (post_step(modified, t)) stepper.initialize(modified, t, stepper.current_time_step());
    }
  }
  return out;
}

}  // namespace lmg::detail

#endif  // LMG_DETAIL_ODE_DRIVER_HPP
