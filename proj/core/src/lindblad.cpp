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


#include "lmg/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <string>

#include <Eigen/SparseLU>

#include "detail/ode_driver.hpp"
#include "lmg/dense_eigen.hpp"
#include "lmg/errors.hpp"
#include "lmg/thermal.hpp"

namespace lmg {
namespace {

using Sop = Superoperator;

void check_build_cap(const SpinOperators& ops, const LindbladOptions& options) {
  const Index n = ops.dim() * ops.dim();
  if (n > options.max_liouville_dim) {
    throw ResourceError("Liouville dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(options.max_liouville_dim));
  }
}

Superoperator jump_form(const SpinOperators& ops, const ModelParams& params) {
  const Matrix h = lmg_hamiltonian(ops, params.lambda);
  if (params.gamma == 0.0) return Complex(0.0, -1.0) * Sop::commutator(h);
  const KappaMatrix kappa = kappa_matrix(params, true);
  const Matrix l = jump_operator(ops, kappa);
  const Matrix h_gamma = (params.gamma / (4.0 * ops.s.value())) * anticommutator(ops.sx, ops.sy);
  const Matrix ldl = l.adjoint() * l;
  return Complex(0.0, -1.0) * Sop::commutator(h + h_gamma) + Sop::sandwich(l, l.adjoint()) -
         0.5 * Sop::anticommutator(ldl);
}

std::vector<Matrix> integrate_linear(const Superoperator& generator, const Matrix& x0,
                                     const std::vector<double>& t_grid, const EvolutionOptions& options) {
  const Index d = generator.dim();
  if (x0.rows() != d || x0.cols() != d) throw InvalidParameter("initial matrix has the wrong shape");
  const auto n = static_cast<std::size_t>(d * d);

  // Complex d x d matrices travel through the integrator as 2 d^2 doubles.
  detail::OdeState start(2 * n);
  std::memcpy(start.data(), x0.data(), n * sizeof(Complex));
  auto rhs = [&generator](const detail::OdeState& x, detail::OdeState& dxdt, double) {
    generator.apply(reinterpret_cast<const Complex*>(x.data()), reinterpret_cast<Complex*>(dxdt.data()));
  };
  detail::OdeOptions ode;
  ode.rtol = options.rtol;
  ode.atol = options.atol;
  const auto states = detail::integrate_on_grid(rhs, start, t_grid, ode);

  std::vector<Matrix> out;
  out.reserve(states.size());
  for (const auto& s : states) {
    Matrix m(d, d);
    const auto* src = reinterpret_cast<const Complex*>(s.data());
    std::copy(src, src + n, m.data());
    out.push_back(std::move(m));
  }
  return out;
}

// Index sets of the two superparity sectors (i + j even / odd) of |i><j|,
// or a single block with every index if the generator mixes them.
std::vector<std::vector<Index>> invariant_blocks(const SparseMatrix& m, Index d) {
  std::vector<std::vector<Index>> blocks(2);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) blocks[(i + j) % 2].push_back(i + d * j);
  }
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      const Index r = it.row() % d + it.row() / d;
      const Index c = it.col() % d + it.col() / d;
      if ((r - c) % 2 != 0 && it.value() != Complex(0.0)) {
        std::vector<Index> all(static_cast<std::size_t>(d * d));
        for (Index q = 0; q < d * d; ++q) all[q] = q;
        return {all};
      }
    }
  }
  if (blocks[1].empty()) blocks.pop_back();
  return blocks;
}

Matrix dense_block(const SparseMatrix& m, const std::vector<Index>& indices) {
  std::vector<Index> local(m.rows(), -1);
  for (std::size_t q = 0; q < indices.size(); ++q) local[indices[q]] = static_cast<Index>(q);
  const auto n = static_cast<Index>(indices.size());
  Matrix block = Matrix::Zero(n, n);
  for (Index k = 0; k < m.outerSize(); ++k) {
    if (local[k] < 0) continue;
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (local[it.row()] >= 0) block(local[it.row()], local[k]) = it.value();
    }
  }
  return block;
}

double frobenius_norm(const SparseMatrix& m) {
  double s = 0.0;
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) s += std::norm(it.value());
  }
  return std::sqrt(s);
}

}  // namespace

Superoperator build_lindbladian(const SpinOperators& ops, const ModelParams& params, const LindbladOptions& options) {
  params.validate();
  check_build_cap(ops, options);
  if (options.form == LindbladForm::kJumpOperator) return jump_form(ops, params);

  const Matrix h = lmg_hamiltonian(ops, params.lambda);
  Superoperator l = Complex(0.0, -1.0) * Sop::commutator(h);
  if (params.gamma == 0.0) return l;

  const KappaMatrix k = kappa_matrix(params, true);
  const Sop cx = Sop::commutator(ops.sx);
  const Sop cy = Sop::commutator(ops.sy);
  l += Complex(0.0, -k.kyx.imag()) * (cx * Sop::anticommutator(ops.sy));
  l += (-0.5 * k.kxx) * (cx * cx);
  l += (-k.kyy) * (cy * cy);
  l += (2.0 * k.kxy.real()) * (cy * cx);
  return l;
}

Superoperator build_adjoint_lindbladian(const SpinOperators& ops, const ModelParams& params,
                                        const LindbladOptions& options) {
  params.validate();
  check_build_cap(ops, options);
  if (options.form == LindbladForm::kJumpOperator) return jump_form(ops, params).adjoint();

  const Matrix h = lmg_hamiltonian(ops, params.lambda);
  Superoperator l = Complex(0.0, 1.0) * Sop::commutator(h);
  if (params.gamma == 0.0) return l;

  const KappaMatrix k = kappa_matrix(params, true);
  const Sop cx = Sop::commutator(ops.sx);
  const Sop cy = Sop::commutator(ops.sy);
  l += Complex(0.0, k.kyx.imag()) * (Sop::anticommutator(ops.sy) * cx);
  l += (-0.5 * k.kxx) * (cx * cx);
  l += (-k.kyy) * (cy * cy);
  l += (2.0 * k.kxy.real()) * (cx * cy);
  return l;
}

std::vector<Matrix> evolve_state(const Superoperator& generator, const Matrix& rho0, const std::vector<double>& t_grid,
                                 const EvolutionOptions& options) {
  return integrate_linear(generator, rho0, t_grid, options);
}

std::vector<Matrix> evolve_observable(const Superoperator& adjoint_generator, const Matrix& a0,
                                      const std::vector<double>& t_grid, const EvolutionOptions& options) {
  return integrate_linear(adjoint_generator, a0, t_grid, options);
}

std::vector<double> expectation_series(const std::vector<Matrix>& states, const Matrix& a) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const Matrix& rho : states) out.push_back(trace_product(rho, a).real());
  return out;
}

EigenPropagator::EigenPropagator(const Superoperator& generator) : dim_(generator.dim()) {
  if (generator.liouville_dim() > kEigenPropagatorCap) {
    throw ResourceError("eigen propagation limited to d^2 <= " + std::to_string(kEigenPropagatorCap));
  }
  const SparseMatrix m = generator.sparse_matrix();
  for (auto& indices : invariant_blocks(m, dim_)) {
    EigenDecomposition eig = general_eigen_decomposition(dense_block(m, indices));
    Block b{std::move(indices), std::move(eig.values), std::move(eig.vectors), {}};
    b.lu.compute(b.vectors);
    blocks_.push_back(std::move(b));
  }
}

Matrix EigenPropagator::propagate(const Matrix& rho0, double t) const { return propagate(rho0, std::vector<double>{t}).front(); }

std::vector<Matrix> EigenPropagator::propagate(const Matrix& rho0, const std::vector<double>& t_grid) const {
  if (rho0.rows() != dim_ || rho0.cols() != dim_) throw InvalidParameter("initial matrix has the wrong shape");
  detail::validate_grid(t_grid, 0.0);
  std::vector<Matrix> out(t_grid.size(), Matrix::Zero(dim_, dim_));
  for (const Block& b : blocks_) {
    const auto n = static_cast<Index>(b.indices.size());
    Vector x0(n);
    for (Index q = 0; q < n; ++q) x0(q) = rho0.data()[b.indices[q]];
    const Vector coeffs = b.lu.solve(x0);
    for (std::size_t g = 0; g < t_grid.size(); ++g) {
      const Vector xt = b.vectors * (coeffs.array() * (b.values.array() * t_grid[g]).exp()).matrix();
      for (Index q = 0; q < n; ++q) out[g].data()[b.indices[q]] = xt(q);
    }
  }
  for (std::size_t g = 0; g < t_grid.size(); ++g) {
    if (t_grid[g] == 0.0) out[g] = rho0;
  }
  return out;
}

std::vector<Complex> liouvillian_spectrum(const Superoperator& generator, Index count) {
  if (generator.liouville_dim() > kDenseLiouvilleCap) {
    throw ResourceError("dense spectrum limited to d^2 <= " + std::to_string(kDenseLiouvilleCap));
  }
  const SparseMatrix m = generator.sparse_matrix();
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(generator.liouville_dim()));
  for (const auto& indices : invariant_blocks(m, generator.dim())) {
    const Vector v = general_eigenvalues(dense_block(m, indices));
    values.insert(values.end(), v.data(), v.data() + v.size());
  }
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });
  if (count > 0 && static_cast<std::size_t>(count) < values.size()) values.resize(static_cast<std::size_t>(count));
  return values;
}

SpectralGap spectral_gap(const Superoperator& generator) {
  const std::vector<Complex> values = liouvillian_spectrum(generator);
  if (values.size() < 2) throw InvalidParameter("spectral gap needs at least two eigenvalues");
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (std::abs(values[i]) < std::abs(values[i0])) i0 = i;
  }
  const double scale = std::max(1.0, frobenius_norm(generator.sparse_matrix()));
  if (values.front().real() - values[i0].real() > 1e-8 * scale) {
    throw NumericError("smallest-modulus eigenvalue is not the rightmost one; spectrum is suspect");
  }
  const std::size_t i1 = (i0 == 0) ? 1 : 0;
  return {values[i0], values[i1], -values[i1].real()};
}

Matrix stationary_state(const Superoperator& generator) {
  const Index d = generator.dim();
  const Index n = d * d;
  const SparseMatrix m = generator.sparse_matrix();
  // Row 0 is minus the sum of the other diagonal rows (trace preservation),
  // so it can carry Tr rho = 1 instead.
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(m.nonZeros() + d));
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
      if (it.row() != 0) triplets.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (Index i = 0; i < d; ++i) triplets.emplace_back(0, i + d * i, 1.0);
  SparseMatrix a(n, n);
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.makeCompressed();

  Eigen::SparseLU<SparseMatrix> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw NumericError("stationary state: sparse LU failed (singular generator?)");
  Vector rhs = Vector::Zero(n);
  rhs(0) = 1.0;
  const Vector x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw NumericError("stationary state: solve failed");
  return unvectorize(x, d);
}

double stationarity_residual(const SpinOperators& ops, const ModelParams& params, double beta_tilde,
                             const LindbladOptions& options) {
  if (params.temperature_mode != TemperatureMode::kExtensive) {
    throw InvalidParameter("stationarity_residual is defined for the extensive-temperature Lindbladian");
  }
  if (!std::isfinite(beta_tilde)) throw InvalidParameter("stationarity_residual needs a finite beta_tilde");
  ModelParams matched = params;
  if (beta_tilde > 0.0) matched.temperature = 1.0 / beta_tilde;
  const Superoperator l = build_lindbladian(ops, matched, options);
  const Matrix rho = gibbs_state(ops, params.lambda, beta_tilde).rho;
  return l.apply(rho).norm() / rho.norm();
}

DensityDiagnostics diagnose_density(const Matrix& rho) {
  DensityDiagnostics d{};
  d.hermiticity_defect = hermiticity_defect(rho);
  d.trace_error = std::abs(rho.trace() - Complex(1.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  d.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Matrix>(herm, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  d.purity = trace_product(rho, rho).real();
  return d;
}

}  // namespace lmg
