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

#ifndef LMG_TYPES_HPP
#define LMG_TYPES_HPP

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace lmg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

/// Largest entry of |A - A^dagger|.
inline double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Tr[A B] without forming the product.
inline Complex trace_product(const Matrix& a, const Matrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

/// Column-stacking vectorization, vec(A)[i + d*j] = A(i, j).
inline Vector vectorize(const Matrix& a) {
  return Eigen::Map<const Vector>(a.data(), a.size());
}

inline Matrix unvectorize(const Vector& v, Index dim) {
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

}  // namespace lmg

#endif  // LMG_TYPES_HPP
