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


#include "lmg/slowflow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail/ode_driver.hpp"
#include "lmg/errors.hpp"
#include "lmg/semiclassical.hpp"
#include "lmg/special_functions.hpp"

namespace lmg {
namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kSeparatrixWindow = 1e-12;
constexpr double kLogWindow = 1e-6;
// Below this distance from eps_g, A is replaced by its linearization.
constexpr double kLinearWindow = 1e-9;

// E(m)/K(m) for 0 <= m < 1 given mc = 1 - m.
double ek_ratio(double m, double mc) {
  if (mc < kLogWindow) {
    const EllipticPair p = complete_elliptic_ke_complement(mc);
    return p.E / p.K;
  }
  return 1.0 - 0.5 * m - elliptic_ratio_defect(m);
}

}  // namespace

SlowFlowState elliptic_parameters(double h0, double lambda) {
  if (!std::isfinite(h0) || !std::isfinite(lambda)) throw DomainError("elliptic_parameters: non-finite input");
  const double eps_g = ground_energy(lambda);
  if (h0 < eps_g - kRangeSlack || h0 > 1.0 + kRangeSlack) {
    throw DomainError("h0 = " + std::to_string(h0) + " outside the spectral range [eps_g, 1] with eps_g = " +
                      std::to_string(eps_g));
  }
  h0 = std::clamp(h0, eps_g, 1.0);

  const double disc = std::max(0.0, lambda * lambda + 2.0 * h0 * lambda + 1.0);
  const double root = std::sqrt(disc);
  const double p = 1.0 + h0 * lambda;
  const double one_minus_h2 = (1.0 - h0) * (1.0 + h0);

  SlowFlowState s{};
  s.h0 = h0;
  s.lambda = lambda;
  s.omega = std::sqrt(root);
  // root^2 - p^2 = lambda^2 (1 - h0^2) lets each branch avoid subtracting
  // nearly equal numbers.
  if (p >= 0.0) {
    s.a2 = 2.0 * one_minus_h2 / (root + p);
    s.one_minus_k2 = root > 0.0 ? (root + p) / (2.0 * root) : 1.0;
  } else {
    s.a2 = 2.0 * (root - p) / (lambda * lambda);
    s.one_minus_k2 = root > 0.0 ? lambda * lambda * one_minus_h2 / (2.0 * root * (root - p))
                                : -std::numeric_limits<double>::infinity();
  }
  s.a2 = std::max(0.0, s.a2);
  s.k2 = root > 0.0 ? s.a2 * lambda * lambda / (4.0 * root) : std::numeric_limits<double>::infinity();
  return s;
}

double oscillation_period(const SlowFlowState& s) {
  if (std::abs(s.one_minus_k2) < kSeparatrixWindow) return std::numeric_limits<double>::infinity();
  if (s.one_minus_k2 > 0.0) {
    const double K = complete_elliptic_ke_complement(std::min(1.0, s.one_minus_k2)).K;
    return 4.0 * K / s.omega;
  }
  // k^2 > 1: Omega k = a |lambda| / 2, and 1 - 1/k^2 = -(1 - k^2) / k^2.
  const double omega_k = 0.5 * std::sqrt(s.a2) * std::abs(s.lambda);
  const double mc = std::isinf(s.k2) ? 1.0 : -s.one_minus_k2 / s.k2;
  const double K = complete_elliptic_ke_complement(std::min(1.0, mc)).K;
  return 2.0 * K / omega_k;
}

double fast_solution(const SlowFlowState& s, double tau) {
  if (s.a2 == 0.0) return 0.0;
  if (std::isinf(s.k2)) return std::sqrt(s.a2);
  return std::sqrt(s.a2) * jacobi_cn(s.omega * tau + s.u, s.k2);
}

double dissipation_A(double h0, double lambda) {
  const SlowFlowState s = elliptic_parameters(h0, lambda);
  if (s.a2 == 0.0 || std::abs(s.one_minus_k2) < kSeparatrixWindow) return 0.0;

  if (s.one_minus_k2 > 0.0) {
    // A = (a^2 Omega^2 / 3) g(m), g(m) = [(1 - m) + (2m - 1) E/K] / m.
    const double m = s.k2;
    const double mc = s.one_minus_k2;
    const double omega2 = s.omega * s.omega;
    double g;
    if (mc < kLogWindow) {
      g = (mc + (2.0 * m - 1.0) * ek_ratio(m, mc)) / m;
    } else if (m == 0.0) {
      g = 1.5;
    } else {
      // With E/K = 1 - m/2 - T the numerator collapses to 3m/2 - m^2 - (2m - 1) T.
      const double t = elliptic_ratio_defect(m);
      g = 1.5 - m - 2.0 * t + t / m;
    }
    return std::max(0.0, s.a2 * omega2 * g / 3.0);
  }

  // k^2 > 1, evaluated at m' = 1/k^2:
  // A = (a^4 lambda^2 / 12) [(2 - m') E/K - 2 (1 - m')].
  const double mp = std::isinf(s.k2) ? 0.0 : 4.0 * s.omega * s.omega / (s.a2 * lambda * lambda);
  const double mcp = std::isinf(s.k2) ? 1.0 : -s.one_minus_k2 / s.k2;
  double q;
  if (mcp < kLogWindow) {
    q = (2.0 - mp) * ek_ratio(mp, mcp) - 2.0 * mcp;
  } else {
    // Substituting E/K = 1 - m'/2 - T leaves m'^2/2 + (m' - 2) T.
    const double t = elliptic_ratio_defect(mp);
    q = 0.5 * mp * mp + (mp - 2.0) * t;
  }
  return std::max(0.0, s.a2 * s.a2 * lambda * lambda * q / 12.0);
}

std::vector<double> eigenvalue_flow(double eps0, double lambda, const std::vector<double>& s_grid) {
  const double eps_g = ground_energy(lambda);
  elliptic_parameters(eps0, lambda);  // range check
  eps0 = std::clamp(eps0, eps_g, 1.0);
  // A vanishes at -1, so a start above it is trapped above it.
  const double floor = (lambda > 1.0 && eps0 >= -1.0) ? -1.0 : eps_g;

  detail::OdeOptions ode;
  ode.rtol = 1e-10;
  ode.atol = 1e-13;
  std::vector<double> out;
  out.reserve(s_grid.size());

  if (floor == eps_g && eps0 > eps_g) {
    // Approach to eps_g is exponential; integrate u = ln(eps - eps_g) so the
    // tail keeps its relative accuracy and cannot overshoot.
    const double rate = dissipation_rate(lambda);
    auto rhs = [lambda, eps_g, rate](const detail::OdeState& v, detail::OdeState& dv, double) {
      const double d = std::exp(v[0]);
      dv[0] = d < kLinearWindow ? -rate : -dissipation_A(eps_g + d, lambda) / d;
    };
    const auto states = detail::integrate_on_grid(rhs, {std::log(eps0 - eps_g)}, s_grid, ode);
    for (const auto& v : states) out.push_back(std::clamp(eps_g + std::exp(v[0]), eps_g, eps0));
    return out;
  }

  auto rhs = [lambda, floor, eps0](const detail::OdeState& v, detail::OdeState& dv, double) {
    dv[0] = -dissipation_A(std::clamp(v[0], floor, eps0), lambda);
  };
  const auto states = detail::integrate_on_grid(rhs, {eps0}, s_grid, ode);
  for (const auto& v : states) out.push_back(std::clamp(v[0], floor, eps0));
  return out;
}

double dissipation_rate(double lambda) {
  if (lambda < 1.0) return 1.0;
  if (lambda == 1.0) return 4.0 / 3.0;
  return 1.0 / lambda;
}

TailFit exponential_tail_to(const std::vector<double>& t, const std::vector<double>& h, double target, double gamma,
                         double min_r_squared) {
  if (t.size() != h.size() || t.size() < 3) throw InvalidParameter("exponential_tail needs >= 3 paired samples");
  if (!(gamma > 0.0)) throw InvalidParameter("exponential_tail needs gamma > 0");
  const auto n = static_cast<double>(t.size());
  std::vector<double> y(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double d = std::abs(h[i] - target);
    if (!(d < 0.1) || d == 0.0) {
      throw FitQualityError("series not in the near-equilibrium regime (|h - target| = " + std::to_string(d) + ")",
                            std::numeric_limits<double>::quiet_NaN());
    }
    y[i] = std::log(d);
  }
  double mt = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    mt += t[i];
    my += y[i];
  }
  mt /= n;
  my /= n;
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    stt += (t[i] - mt) * (t[i] - mt);
    sty += (t[i] - mt) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (stt == 0.0) throw InvalidParameter("exponential_tail needs distinct times");
  const double slope = sty / stt;
  const double intercept = my - slope * mt;
  const double r2 = syy > 0.0 ? sty * sty / (stt * syy) : 1.0;

  TailFit fit{};
  fit.rate = -slope;
  fit.rate_over_gamma = fit.rate / gamma;
  fit.r_squared = r2;
  const double sign = (h.back() - target) < 0.0 ? -1.0 : 1.0;
  fit.amplitude = sign * std::exp(intercept);
  double offset = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) offset += h[i] - target - fit.amplitude * std::exp(slope * t[i]);
  fit.offset = offset / n;
  if (r2 < min_r_squared) {
    throw FitQualityError("log-linear fit R^2 = " + std::to_string(r2) + " below " + std::to_string(min_r_squared),
                          r2);
  }
  return fit;
}

TailFit exponential_tail(const std::vector<double>& t, const std::vector<double>& h, double lambda, double gamma) {
  return exponential_tail_to(t, h, ground_energy(lambda), gamma);
}

}  // namespace lmg
