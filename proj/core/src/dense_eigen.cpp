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


#include "lmg/dense_eigen.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

EigenDecomposition run_zgeev(Matrix& a, bool want_vectors) {
  if (a.rows() != a.cols()) throw InvalidParameter("eigenproblem needs a square matrix");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EigenDecomposition out;
  out.values.resize(n);
  if (n == 0) return out;
  if (want_vectors) out.vectors.resize(n, n);
  Complex dummy;
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, a.data(), n,
                                        out.values.data(), &dummy, 1,
                                        want_vectors ? out.vectors.data() : &dummy, want_vectors ? n : 1);
  if (info > 0) throw NumericError("zgeev failed to converge (info = " + std::to_string(info) + ")");
  if (info < 0) throw ContractViolation("zgeev rejected argument " + std::to_string(-info));
  return out;
}

}  // namespace

Vector general_eigenvalues(Matrix a) { return run_zgeev(a, false).values; }

EigenDecomposition general_eigen_decomposition(Matrix a) { return run_zgeev(a, true); }

}  // namespace lmg
