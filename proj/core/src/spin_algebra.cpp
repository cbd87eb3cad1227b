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

#include "lmg/spin_algebra.hpp"

#include <cmath>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {

SpinQuantumNumber::SpinQuantumNumber(double s) {
  const double twice = 2.0 * s;
  if (!std::isfinite(s) || s < 0.0 || std::abs(twice - std::round(twice)) > 1e-12) {
    throw InvalidParameter("spin quantum number must be a nonnegative half-integer, got " + std::to_string(s));
  }
  twice_ = static_cast<int>(std::lround(twice));
}

SpinQuantumNumber SpinQuantumNumber::from_twice(int twice_s) {
  if (twice_s < 0) {
    throw InvalidParameter("2S must be nonnegative, got " + std::to_string(twice_s));
  }
  SpinQuantumNumber s;
  s.twice_ = twice_s;
  return s;
}

Matrix SpinOperators::casimir() const { return sx * sx + sy * sy + sz * sz; }

SpinOperators build_spin_operators(SpinQuantumNumber s) {
  const Index d = s.dim();
  const double sv = s.value();

  // S+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>; with m = S - k, |m+1> is index k-1.
  Matrix splus = Matrix::Zero(d, d);
  for (Index k = 1; k < d; ++k) {
    const double m = sv - static_cast<double>(k);
    splus(k - 1, k) = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
  }

  SpinOperators ops{s, {}, {}, {}, Matrix::Identity(d, d)};
  ops.sx = 0.5 * (splus + splus.adjoint());
  ops.sy = (splus - splus.adjoint()) / Complex(0.0, 2.0);
  ops.sz = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) ops.sz(k, k) = sv - static_cast<double>(k);
  return ops;
}

SpinOperators build_spin_operators(double s) { return build_spin_operators(SpinQuantumNumber(s)); }

Matrix lmg_hamiltonian(const SpinOperators& ops, double lambda) {
  if (!std::isfinite(lambda)) throw InvalidParameter("lambda must be finite");
  const double sv = ops.s.value();
  if (sv == 0.0) return -ops.sz;  // the Sx^2 / S term vanishes identically for S = 0
  return -(lambda / (2.0 * sv)) * (ops.sx * ops.sx) - ops.sz;
}

Matrix rescaled_hamiltonian(const SpinOperators& ops, double lambda) {
  const double sv = ops.s.value();
  if (sv == 0.0) throw InvalidParameter("rescaled energy needs S > 0");
  return lmg_hamiltonian(ops, lambda) / sv;
}

double hilbert_schmidt_normalization(SpinQuantumNumber s) {
  const double sv = s.value();
  return std::sqrt(sv * (sv + 1.0) * (2.0 * sv + 1.0) / 3.0);
}

Matrix spin_parity(const SpinOperators& ops) {
  const Index d = ops.dim();
  Matrix p = Matrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return p;
}

}  // namespace lmg
