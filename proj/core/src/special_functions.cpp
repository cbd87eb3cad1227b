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

#include "lmg/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmIterations = 64;

// Below this complementary parameter K and E come from their expansions
// about m = 1 rather than from the AGM.
constexpr double kLogBranchComplement = 1e-6;

// Within this distance of m = 1 the Jacobi functions take their hyperbolic limits.
constexpr double kHyperbolicWindow = 1e-12;

// Runs the AGM from (1, sqrt(mc)) and returns a_N together with
// T = sum_{n>=1} 2^(n-1) c_n^2. The c_n follow c_{n+1} = c_n^2 / (4 a_{n+1}),
// which keeps full relative precision when m is small.
struct AgmResult {
  double a;
  double tail;
};

AgmResult agm(double m, double mc) {
  double a = 1.0;
  double b = std::sqrt(mc);
  double c2 = m;
  double weight = 0.5;
  double tail = 0.0;
  for (int n = 0; n < kMaxAgmIterations; ++n) {
    const double a_next = 0.5 * (a + b);
    c2 = c2 * c2 / (16.0 * a_next * a_next);
    b = std::sqrt(a * b);
    a = a_next;
    weight *= 2.0;
    tail += weight * c2;
    if (weight * c2 <= kEps * kEps * std::max(tail, kEps) || std::abs(a - b) <= kEps * a) break;
  }
  return {a, tail};
}

EllipticPair agm_ke(double m, double mc) {
  // E = K (1 - m/2 - T).
  const AgmResult r = agm(m, mc);
  const double K = kPi / (2.0 * r.a);
  return {m, K, K * (1.0 - 0.5 * m - r.tail)};
}

// Expansions about m = 1 in powers of mc with L = ln(4 / sqrt(mc)), kept
// through mc^2 so the truncation error stays below 1e-15 on the window.
EllipticPair log_branch_ke(double mc) {
  const double L = std::log(4.0) - 0.5 * std::log(mc);
  const double K = L + 0.25 * mc * (L - 1.0) + (9.0 / 64.0) * mc * mc * (L - 7.0 / 6.0);
  const double E = 1.0 + 0.5 * mc * (L - 0.5) + (3.0 / 16.0) * mc * mc * (L - 13.0 / 12.0);
  return {1.0 - mc, K, E};
}

// sn, cn, dn for 0 <= m < 1 by descending Landen / AGM (Abramowitz-Stegun 16.4).
JacobiTriple jacobi_agm(double u, double m) {
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};

  std::array<double, kMaxAgmIterations + 1> a{};
  std::array<double, kMaxAgmIterations + 1> c{};
  a[0] = 1.0;
  double b = std::sqrt(1.0 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::abs(c[n]) > kEps * a[n] && n < kMaxAgmIterations) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  double phi_prev = phi;
  for (int j = n; j > 0; --j) {
    phi_prev = phi;
    phi = 0.5 * (phi + std::asin(c[j] * std::sin(phi) / a[j]));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = (n > 0) ? cn / std::cos(phi_prev - phi) : 1.0;
  return {sn, cn, dn};
}

}  // namespace

EllipticPair complete_elliptic_ke(double m) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError("complete_elliptic_ke: parameter m must lie in [0, 1), got " + std::to_string(m));
  }
  return complete_elliptic_ke_complement(1.0 - m);
}

EllipticPair complete_elliptic_ke_complement(double mc) {
  if (!(mc > 0.0 && mc <= 1.0)) {
    throw DomainError("complete_elliptic_ke_complement: 1 - m must lie in (0, 1], got " + std::to_string(mc));
  }
  if (mc < kLogBranchComplement) return log_branch_ke(mc);
  return agm_ke(1.0 - mc, mc);
}

double elliptic_ratio_defect(double m) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError("elliptic_ratio_defect: parameter m must lie in [0, 1), got " + std::to_string(m));
  }
  return agm(m, 1.0 - m).tail;
}

JacobiTriple jacobi_elliptic(double u, double m) {
  if (!std::isfinite(u) || !std::isfinite(m) || m < 0.0) {
    throw DomainError("jacobi_elliptic: need finite u and m >= 0");
  }
  if (std::abs(m - 1.0) < kHyperbolicWindow) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  if (m > 1.0) {
    // Reciprocal parameter: with k^2 = m, mu = 1/m and v = k u,
    // sn(u|m) = sn(v|mu)/k, cn(u|m) = dn(v|mu), dn(u|m) = cn(v|mu).
    const double k = std::sqrt(m);
    const JacobiTriple r = jacobi_elliptic(k * u, 1.0 / m);
    return {r.sn / k, r.dn, r.cn};
  }
  // Reduce to [-2K, 2K] so phi_N stays moderate; sn and cn flip sign
  // under a half-period shift, dn does not.
  const double K = complete_elliptic_ke(m).K;
  const double period = 4.0 * K;
  double v = std::remainder(u, period);
  return jacobi_agm(v, m);
}

double jacobi_cn(double u, double m) { return jacobi_elliptic(u, m).cn; }

double digamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("digamma: argument must be positive, got " + std::to_string(x));
  }
  double shift = 0.0;
  while (x < 8.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k}), k = 1..7.
  constexpr std::array<double, 7> kCoefficients = {
      1.0 / 12.0,           // B2 / 2
      -1.0 / 120.0,         // B4 / 4
      1.0 / 252.0,          // B6 / 6
      -1.0 / 240.0,         // B8 / 8
      1.0 / 132.0,          // B10 / 10
      -691.0 / 32760.0,     // B12 / 12
      1.0 / 12.0,           // B14 / 14
  };
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (auto it = kCoefficients.rbegin(); it != kCoefficients.rend(); ++it) {
    series = series * inv2 + *it;
  }
  series *= inv2;
  return shift + std::log(x) - 0.5 / x - series;
}

}  // namespace lmg
