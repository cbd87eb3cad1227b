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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lmg/errors.hpp"
#include "oracles/oracles.hpp"

namespace lmg {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(EllipticKE, DegenerateParameter) {
  const EllipticPair p = complete_elliptic_ke(0.0);
  EXPECT_NEAR(p.K, kPi / 2, 1e-15);
  EXPECT_NEAR(p.E, kPi / 2, 1e-15);
}

TEST(EllipticKE, HalfMatchesQuadrature) {
  const EllipticPair p = complete_elliptic_ke(0.5);
  EXPECT_NEAR(p.K, oracle::elliptic_k(0.5), 1e-13);
  EXPECT_NEAR(p.E, oracle::elliptic_e(0.5), 1e-13);
  EXPECT_NEAR(p.K, 1.854074677, 1e-9);
  EXPECT_NEAR(p.E, 1.350643881, 1e-9);
}

TEST(EllipticKE, QuadratureSweep) {
  for (double m = 0.0; m < 0.99; m += 0.0625) {
    const EllipticPair p = complete_elliptic_ke(m);
    EXPECT_NEAR(p.K, oracle::elliptic_k(m), 1e-12 * p.K) << "m = " << m;
    EXPECT_NEAR(p.E, oracle::elliptic_e(m), 1e-12) << "m = " << m;
  }
}

TEST(EllipticKE, LogarithmicDivergenceNearOne) {
  const double mc = 1e-8;
  const EllipticPair p = complete_elliptic_ke(1.0 - mc);
  // Leading asymptotics K ~ ln(16 / mc) / 2, E -> 1 with O(mc ln mc) corrections.
  EXPECT_NEAR(p.K, 0.5 * std::log(16.0 / mc), 1e-6);
  EXPECT_NEAR(p.E, 1.0, 1e-6);
}

TEST(EllipticKE, BranchesAgreeAcrossLogWindow) {
  for (double mc : {2e-6, 1.01e-6, 0.99e-6, 5e-7}) {
    const EllipticPair p = complete_elliptic_ke_complement(mc);
    EXPECT_NEAR(p.K, oracle::elliptic_k(1.0 - mc), 1e-9) << mc;
    EXPECT_NEAR(p.E, oracle::elliptic_e(1.0 - mc), 1e-12) << mc;
  }
}

TEST(EllipticKE, LegendreRelation) {
  for (double m = 0.05; m < 1.0; m += 0.1) {
    const EllipticPair a = complete_elliptic_ke(m);
    const EllipticPair b = complete_elliptic_ke(1.0 - m);
    EXPECT_NEAR(a.E * b.K + b.E * a.K - a.K * b.K, kPi / 2, 1e-10) << m;
    EXPECT_GE(a.K, kPi / 2);
    EXPECT_LE(a.E, kPi / 2);
  }
}

TEST(EllipticKE, RejectsOutsideDomain) {
  EXPECT_THROW(complete_elliptic_ke(1.0), DomainError);
  EXPECT_THROW(complete_elliptic_ke(-0.1), DomainError);
  EXPECT_THROW(complete_elliptic_ke_complement(0.0), DomainError);
}

TEST(EllipticRatioDefect, SmallParameterKeepsRelativePrecision) {
  // T(m) = m^2/16 + m^3/32 + O(m^4).
  const double m = 1e-6;
  EXPECT_NEAR(elliptic_ratio_defect(m) / (m * m / 16.0), 1.0 + m / 2.0, 1e-9);
  const double m2 = 0.3;
  EXPECT_NEAR(elliptic_ratio_defect(m2), 1.0 - m2 / 2 - oracle::elliptic_e(m2) / oracle::elliptic_k(m2), 1e-14);
}

TEST(JacobiCn, CircularAndHyperbolicLimits) {
  for (double u : {-3.0, -0.4, 0.0, 0.7, 2.5, 11.0}) {
    EXPECT_NEAR(jacobi_cn(u, 0.0), std::cos(u), 1e-14) << u;
    EXPECT_NEAR(jacobi_cn(u, 1.0), 1.0 / std::cosh(u), 1e-14) << u;
  }
}

TEST(JacobiCn, MatchesOdeOracle) {
  EXPECT_NEAR(jacobi_cn(1.0, 0.5), oracle::jacobi_cn(1.0, 0.5), 1e-9);
  for (double m : {0.1, 0.5, 0.9, 0.999, 1.5, 3.0}) {
    for (double u : {0.3, 1.0, 2.7, 6.0}) {
      EXPECT_NEAR(jacobi_cn(u, m), oracle::jacobi_cn(u, m), 1e-9) << "u = " << u << ", m = " << m;
    }
  }
}

TEST(JacobiCn, QuarterPeriodZero) {
  for (int i = 1; i <= 9; ++i) {
    const double m = 0.1 * i;
    EXPECT_NEAR(jacobi_cn(complete_elliptic_ke(m).K, m), 0.0, 1e-10) << m;
  }
}

TEST(JacobiCn, PeriodicAndBounded) {
  for (double m : {0.2, 0.7, 0.95}) {
    const double period = 4.0 * complete_elliptic_ke(m).K;
    for (double u = -5.0; u < 5.0; u += 0.37) {
      const double c = jacobi_cn(u, m);
      EXPECT_LE(std::abs(c), 1.0 + 1e-15);
      EXPECT_NEAR(jacobi_cn(u + 3.0 * period, m), c, 1e-11);
    }
  }
}

TEST(JacobiCn, SatisfiesDifferentialEquation) {
  // Central second difference against y'' = -(1 - 2m) y - 2m y^3.
  const double step = 1e-3;
  for (double m : {0.1, 0.5, 0.9, 2.0}) {
    for (double u = 0.2; u < 4.0; u += 0.45) {
      const double y = jacobi_cn(u, m);
      const double ypp = (jacobi_cn(u + step, m) - 2.0 * y + jacobi_cn(u - step, m)) / (step * step);
      EXPECT_NEAR(ypp, -(1.0 - 2.0 * m) * y - 2.0 * m * y * y * y, 1e-6) << u << " " << m;
    }
  }
}

TEST(JacobiElliptic, PythagoreanIdentities) {
  for (double m : {0.3, 0.8, 1.7}) {
    for (double u = -2.0; u < 3.0; u += 0.5) {
      const JacobiTriple t = jacobi_elliptic(u, m);
      EXPECT_NEAR(t.sn * t.sn + t.cn * t.cn, 1.0, 1e-13);
      EXPECT_NEAR(t.dn * t.dn + m * t.sn * t.sn, 1.0, 1e-13);
    }
  }
}

TEST(Digamma, KnownValues) {
  EXPECT_NEAR(digamma(2.0) - digamma(1.0), 1.0, 1e-15);
  EXPECT_NEAR(digamma(1.0), -oracle::euler_mascheroni(), 1e-14);
  EXPECT_NEAR(digamma(1.0), -0.5772156649, 1e-10);
  // psi(1/2) = -gamma - 2 ln 2.
  EXPECT_NEAR(digamma(0.5), -oracle::euler_mascheroni() - 2.0 * std::log(2.0), 1e-14);
}

TEST(Digamma, RecurrenceChain) {
  double expected = digamma(0.5);
  for (int k = 0; k < 10; ++k) expected += 1.0 / (0.5 + k);
  EXPECT_NEAR(digamma(10.5), expected, 1e-13);
  for (double x : {0.01, 0.3, 1.7, 7.9, 8.0, 25.0, 1e4}) {
    EXPECT_NEAR(digamma(x + 1.0), digamma(x) + 1.0 / x, 1e-12 * std::max(1.0, 1.0 / x)) << x;
  }
}

TEST(Digamma, RejectsNonPositive) {
  EXPECT_THROW(digamma(0.0), DomainError);
  EXPECT_THROW(digamma(-1.5), DomainError);
}

}  // namespace
}  // namespace lmg
