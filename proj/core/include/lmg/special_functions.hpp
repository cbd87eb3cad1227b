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

#ifndef LMG_SPECIAL_FUNCTIONS_HPP
#define LMG_SPECIAL_FUNCTIONS_HPP

namespace lmg {

/// Complete elliptic integrals of the first and second kind at parameter
/// m = k^2 (not the modulus k).
struct EllipticPair {
  double m;
  double K;
  double E;
};

/// K(m) and E(m) for 0 <= m < 1 by the arithmetic-geometric mean.
/// Throws DomainError outside [0, 1).
EllipticPair complete_elliptic_ke(double m);

/// Same as complete_elliptic_ke(1 - mc), but takes the complementary
/// parameter mc = 1 - m directly so callers that know it to full relative
/// precision do not lose it to cancellation. For mc < 1e-6 the logarithmic
/// expansions about m = 1 are used. Requires 0 < mc <= 1.
EllipticPair complete_elliptic_ke_complement(double mc);

/// T(m) = 1 - m/2 - E(m)/K(m), computed from the AGM sequence without
/// cancellation, so T(m) ~ m^2/16 keeps full relative precision as m -> 0.
double elliptic_ratio_defect(double m);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// sn, cn, dn at parameter m >= 0. For m > 1 the reciprocal-parameter
/// transformation is applied; within 1e-12 of m = 1 the hyperbolic limits
/// (tanh, sech, sech) are returned.
JacobiTriple jacobi_elliptic(double u, double m);

/// Jacobi elliptic cosine cn(u | m), m >= 0.
double jacobi_cn(double u, double m);

/// Digamma function psi(x) for x > 0. Throws DomainError for x <= 0.
double digamma(double x);

}  // namespace lmg

#endif  // LMG_SPECIAL_FUNCTIONS_HPP
