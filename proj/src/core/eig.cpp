// Copyright 2026 The majq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace majq {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing A(p,q). With b = A(p,q) = |b| e^{iφ} the
// rotation G acts on the (p,q) plane as
//   G_pp = c, G_pq = s e^{iφ}, G_qp = -s e^{-iφ}, G_qq = c,
// where t = s/c solves t² + 2τt - 1 = 0 for τ = (A_qq - A_pp) / (2|b|),
// picking the smaller-magnitude root for stability.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex b = a(p, q);
  const double babs = std::abs(b);
  if (babs == 0.0) return;

  const Complex phase = b / babs;  // e^{iφ}
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * babs);
  double t;
  if (tau == 0.0) {
    t = 1.0;
  } else {
    t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = c * c * app - 2.0 * c * s * babs + s * s * aqq;
  a(q, q) = s * s * app + 2.0 * c * s * babs + c * c * aqq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
  ComplexMatrix a = h.matrix();
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Symmetrize exactly so rotations see conjugate pairs.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = m;
      a(j, i) = std::conj(m);
    }
  }

  const double target = 1e-14 * std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;
  bool converged = off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.eigenvalues[col] = a(src, src).real();
    std::size_t imax = 0;
    double vmax = -1.0;
    for (std::size_t row = 0; row < n; ++row) {
      const double m = std::abs(v(row, src));
      if (m > vmax) {
        vmax = m;
        imax = row;
      }
    }
    Complex phase = 1.0;
    if (vmax > 0.0) phase = std::abs(v(imax, src)) / v(imax, src);
    for (std::size_t row = 0; row < n; ++row)
      out.eigenvectors(row, col) = phase * v(row, src);
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
  return hermitian_eig(HermitianMatrix(a));
}

bool is_psd(const HermitianMatrix& a, double tol) {
  const auto eig = hermitian_eig(a);
  return eig.eigenvalues.empty() || eig.eigenvalues.back() >= -tol;
}

ComplexMatrix inverse_sqrt(const HermitianMatrix& m, double tol) {
  const auto eig = hermitian_eig(m);
  const std::size_t n = eig.eigenvalues.size();
  for (double w : eig.eigenvalues) {
    if (w <= tol) {
      throw Error(ErrorCode::BadSpectrum, "inverse_sqrt needs a positive spectrum");
    }
  }
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0 / std::sqrt(eig.eigenvalues[i]);
  return eig.eigenvectors * d * eig.eigenvectors.adjoint();
}

}  // namespace majq
