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


#ifndef LMG_SUPEROPERATOR_HPP
#define LMG_SUPEROPERATOR_HPP

#include <vector>

#include <Eigen/SparseCore>

#include "lmg/types.hpp"

namespace lmg {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Liouville dimension above which dense d^2 x d^2 matrices are refused.
inline constexpr Index kDenseLiouvilleCap = 6561;

/// Linear map on d x d matrices, stored as a sum of sandwich terms
/// c A rho B. In column-stacking vectorization the term c A . B becomes
/// c (B^T kron A).
class Superoperator {
 public:
  /// Zero map on d x d matrices.
  explicit Superoperator(Index dim);

  static Superoperator identity(Index dim);
  /// rho -> A rho.
  static Superoperator left(const Matrix& a);
  /// rho -> rho B.
  static Superoperator right(const Matrix& b);
  /// rho -> A rho B.
  static Superoperator sandwich(const Matrix& a, const Matrix& b);
  /// rho -> [A, rho].
  static Superoperator commutator(const Matrix& a);
  /// rho -> {A, rho}.
  static Superoperator anticommutator(const Matrix& a);

  Index dim() const noexcept { return dim_; }
  /// d^2.
  Index liouville_dim() const noexcept { return dim_ * dim_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Superoperator& operator+=(const Superoperator& other);
  Superoperator& operator-=(const Superoperator& other);
  Superoperator& operator*=(Complex c);
  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  friend Superoperator operator*(Complex c, Superoperator a) { return a *= c; }
  friend Superoperator operator*(double c, Superoperator a) { return a *= Complex(c); }
  /// Composition: (a * b)(rho) = a(b(rho)).
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);

  Matrix apply(const Matrix& rho) const;
  /// out = L(in) on column-stacked vectors of length d^2; in and out must not alias.
  void apply(const Complex* in, Complex* out) const;

  /// Adjoint with respect to the Hilbert-Schmidt product Tr[X^dagger Y].
  Superoperator adjoint() const;

  SparseMatrix sparse_matrix() const;
  /// Dense d^2 x d^2 matrix; throws ResourceError above kDenseLiouvilleCap.
  Matrix matrix() const;

 private:
  // Empty a or b stands for the identity.
  struct Term {
    Complex c;
    Matrix a;
    Matrix b;
  };

  void add_term(Complex c, Matrix a, Matrix b);
  void compile();

  Index dim_;
  std::vector<Term> terms_;

  // Compiled form: K_l rho + rho K_r + sum_j c_j A_j rho B_j with sparse factors.
  SparseMatrix left_sum_;
  SparseMatrix right_sum_;
  std::vector<Complex> sandwich_c_;
  std::vector<SparseMatrix> sandwich_a_;
  std::vector<SparseMatrix> sandwich_b_;
};

}  // namespace lmg

#endif  // LMG_SUPEROPERATOR_HPP
