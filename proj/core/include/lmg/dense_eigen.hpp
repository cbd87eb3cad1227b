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


#ifndef LMG_DENSE_EIGEN_HPP
#define LMG_DENSE_EIGEN_HPP

#include "lmg/types.hpp"

namespace lmg {

struct EigenDecomposition {
  Vector values;
  /// Right eigenvectors as columns.
  Matrix vectors;
};

/// Eigenvalues of a general complex square matrix (LAPACK zgeev).
/// Throws NumericError if the QR iteration fails to converge.
Vector general_eigenvalues(Matrix a);

/// Eigenvalues and right eigenvectors of a general complex square matrix.
EigenDecomposition general_eigen_decomposition(Matrix a);

}  // namespace lmg

#endif  // LMG_DENSE_EIGEN_HPP
