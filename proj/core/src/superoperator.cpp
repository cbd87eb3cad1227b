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


#include "lmg/superoperator.hpp"

#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

SparseMatrix to_sparse(const Matrix& m) {
  return m.sparseView(Complex(0.0), 0.0);
}

SparseMatrix sparse_identity(Index d) {
  SparseMatrix id(d, d);
  id.setIdentity();
  return id;
}

bool same_factor(const Matrix& x, const Matrix& y) {
  if (x.size() == 0 || y.size() == 0) return x.size() == y.size();
  return x == y;
}

}  // namespace

Superoperator::Superoperator(Index dim) : dim_(dim) {
  if (dim <= 0) throw InvalidParameter("superoperator dimension must be positive");
  compile();
}

Superoperator Superoperator::identity(Index dim) {
  Superoperator s(dim);
  s.add_term(1.0, Matrix(), Matrix());
  s.compile();
  return s;
}

Superoperator Superoperator::left(const Matrix& a) {
  Superoperator s(a.rows());
  s.add_term(1.0, a, Matrix());
  s.compile();
  return s;
}

Superoperator Superoperator::right(const Matrix& b) {
  Superoperator s(b.rows());
  s.add_term(1.0, Matrix(), b);
  s.compile();
  return s;
}

Superoperator Superoperator::sandwich(const Matrix& a, const Matrix& b) {
  Superoperator s(a.rows());
  s.add_term(1.0, a, b);
  s.compile();
  return s;
}

Superoperator Superoperator::commutator(const Matrix& a) { return left(a) - right(a); }

Superoperator Superoperator::anticommutator(const Matrix& a) { return left(a) + right(a); }

void Superoperator::add_term(Complex c, Matrix a, Matrix b) {
  if (c == Complex(0.0)) return;
  if ((a.size() != 0 && (a.rows() != dim_ || a.cols() != dim_)) ||
      (b.size() != 0 && (b.rows() != dim_ || b.cols() != dim_))) {
    throw InvalidParameter("superoperator factor has wrong shape");
  }
  for (Term& t : terms_) {
    if (same_factor(t.a, a) && same_factor(t.b, b)) {
      t.c += c;
      return;
    }
  }
  terms_.push_back({c, std::move(a), std::move(b)});
}

void Superoperator::compile() {
  Matrix left = Matrix::Zero(dim_, dim_);
  Matrix right = Matrix::Zero(dim_, dim_);
  sandwich_c_.clear();
  sandwich_a_.clear();
  sandwich_b_.clear();
  for (const Term& t : terms_) {
    if (t.a.size() == 0 && t.b.size() == 0) {
      left += t.c * Matrix::Identity(dim_, dim_);
    } else if (t.b.size() == 0) {
      left += t.c * t.a;
    } else if (t.a.size() == 0) {
      right += t.c * t.b;
    } else {
      sandwich_c_.push_back(t.c);
      sandwich_a_.push_back(to_sparse(t.a));
      sandwich_b_.push_back(to_sparse(t.b));
    }
  }
  left_sum_ = to_sparse(left);
  right_sum_ = to_sparse(right);
}

Superoperator& Superoperator::operator+=(const Superoperator& other) {
  if (other.dim_ != dim_) throw InvalidParameter("superoperator dimensions differ");
  for (const Term& t : other.terms_) add_term(t.c, t.a, t.b);
  compile();
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& other) {
  if (other.dim_ != dim_) throw InvalidParameter("superoperator dimensions differ");
  for (const Term& t : other.terms_) add_term(-t.c, t.a, t.b);
  compile();
  return *this;
}

Superoperator& Superoperator::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
  } else {
    for (Term& t : terms_) t.c *= c;
  }
  compile();
  return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw InvalidParameter("superoperator dimensions differ");
  // (c1 A1 . B1)(c2 A2 rho B2) = c1 c2 (A1 A2) rho (B2 B1).
  auto product = [](const Matrix& x, const Matrix& y) -> Matrix {
    if (x.size() == 0) return y;
    if (y.size() == 0) return x;
    return x * y;
  };
  Superoperator out(a.dim_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      out.add_term(ta.c * tb.c, product(ta.a, tb.a), product(tb.b, ta.b));
    }
  }
  out.compile();
  return out;
}

Matrix Superoperator::apply(const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) throw InvalidParameter("superoperator applied to wrong shape");
  Matrix out(dim_, dim_);
  apply(rho.data(), out.data());
  return out;
}

void Superoperator::apply(const Complex* in, Complex* out) const {
  Eigen::Map<const Matrix> x(in, dim_, dim_);
  Eigen::Map<Matrix> y(out, dim_, dim_);
  y.noalias() = left_sum_ * x;
  y.noalias() += x * right_sum_;
  Matrix ax(dim_, dim_);
  for (std::size_t j = 0; j < sandwich_c_.size(); ++j) {
    ax.noalias() = sandwich_a_[j] * x;
    y.noalias() += sandwich_c_[j] * (ax * sandwich_b_[j]);
  }
}

Superoperator Superoperator::adjoint() const {
  // Tr[X^dagger A rho B] = Tr[(A^dagger X B^dagger)^dagger rho].
  Superoperator out(dim_);
  for (const Term& t : terms_) {
    out.add_term(std::conj(t.c), t.a.size() ? Matrix(t.a.adjoint()) : Matrix(),
                 t.b.size() ? Matrix(t.b.adjoint()) : Matrix());
  }
  out.compile();
  return out;
}

SparseMatrix Superoperator::sparse_matrix() const {
  const SparseMatrix id = sparse_identity(dim_);
  SparseMatrix m = Eigen::kroneckerProduct(id, left_sum_).eval();
  m += Eigen::kroneckerProduct(SparseMatrix(right_sum_.transpose()), id).eval();
  for (std::size_t j = 0; j < sandwich_c_.size(); ++j) {
    SparseMatrix term = Eigen::kroneckerProduct(SparseMatrix(sandwich_b_[j].transpose()), sandwich_a_[j]).eval();
    m += sandwich_c_[j] * term;
  }
  m.prune(Complex(0.0));
  m.makeCompressed();
  return m;
}

Matrix Superoperator::matrix() const {
  if (liouville_dim() > kDenseLiouvilleCap) {
    throw ResourceError("dense superoperator of size " + std::to_string(liouville_dim()) + " exceeds cap " +
                        std::to_string(kDenseLiouvilleCap));
  }
  return Matrix(sparse_matrix());
}

}  // namespace lmg
