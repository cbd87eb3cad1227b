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

#ifndef LMG_SPIN_ALGEBRA_HPP
#define LMG_SPIN_ALGEBRA_HPP

#include "lmg/types.hpp"

namespace lmg {

/// Spin quantum number S, stored as the integer 2S so that half-integers
/// are represented exactly.
class SpinQuantumNumber {
 public:
  /// Throws InvalidParameter unless 2s is a nonnegative integer.
  explicit SpinQuantumNumber(double s);

  static SpinQuantumNumber from_twice(int twice_s);

  double value() const noexcept { return 0.5 * twice_; }
  int twice() const noexcept { return twice_; }
  Index dim() const noexcept { return twice_ + 1; }

  friend bool operator==(SpinQuantumNumber, SpinQuantumNumber) = default;

 private:
  SpinQuantumNumber() = default;
  int twice_ = 0;
};

/// Angular-momentum matrices for a single spin S in the Sz eigenbasis,
/// ordered by descending eigenvalue: basis index k carries m = S - k.
struct SpinOperators {
  SpinQuantumNumber s;
  Matrix sx;
  Matrix sy;
  Matrix sz;
  Matrix identity;

  Index dim() const noexcept { return s.dim(); }
  /// Sx^2 + Sy^2 + Sz^2.
  Matrix casimir() const;
};

SpinOperators build_spin_operators(SpinQuantumNumber s);
SpinOperators build_spin_operators(double s);

/// LMG Hamiltonian H = -(lambda / 2S) Sx^2 - Sz.
Matrix lmg_hamiltonian(const SpinOperators& ops, double lambda);

/// Rescaled energy operator h = H / S.
Matrix rescaled_hamiltonian(const SpinOperators& ops, double lambda);

/// Constant N with Tr[(Sx/N)^2] = Tr[(Sy/N)^2] = 1, i.e.
/// N = sqrt(S(S+1)(2S+1)/3).
double hilbert_schmidt_normalization(SpinQuantumNumber s);

/// Parity Pi = exp(i pi (S - Sz)) in the Sz basis: diag(+1, -1, +1, ...).
/// H commutes with it; Sx and Sy anticommute with it.
Matrix spin_parity(const SpinOperators& ops);

}  // namespace lmg

#endif  // LMG_SPIN_ALGEBRA_HPP
