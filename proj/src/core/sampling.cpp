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

#include "core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace majq {

ComplexMatrix haar_unitary(std::size_t n, SplitMix64& rng) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");

  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.gaussian_complex();

  // Householder QR, accumulating Q explicitly. Reflector v = x - α e₁ with
  // α = -e^{iθ} ||x||, θ = arg(x₀), leaves R_kk = α; the final column scaling
  // divides those phases back out.
  ComplexMatrix q = ComplexMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;

    const Complex x0 = a(k, k);
    const Complex theta = (std::abs(x0) == 0.0) ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -theta * xnorm;

    std::vector<Complex> v(n - k);
    v[0] = x0 - alpha;
    for (std::size_t i = k + 1; i < n; ++i) v[i - k] = a(i, k);
    double vnorm2 = 0.0;
    for (const Complex& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;

    const auto reflect = [&](ComplexMatrix& m, std::size_t col_begin) {
      for (std::size_t j = col_begin; j < n; ++j) {
        Complex dot = 0.0;
        for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i - k]) * m(i, j);
        const Complex f = 2.0 * dot / vnorm2;
        for (std::size_t i = k; i < n; ++i) m(i, j) -= f * v[i - k];
      }
    };
    reflect(a, k);
    reflect(q, 0);
  }
  // q currently holds H_{n-1}…H_1, i.e. Q†; also fold in diag(R_kk/|R_kk|).
  ComplexMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex rkk = a(i, i);
    const Complex d = (std::abs(rkk) == 0.0) ? Complex(1.0) : rkk / std::abs(rkk);
    for (std::size_t j = 0; j < n; ++j) u(j, i) = std::conj(q(i, j)) * d;
  }
  return u;
}

ComplexMatrix random_haar_unitary(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return haar_unitary(n, rng);
}

std::vector<double> sample_simplex_sorted(std::size_t n, SplitMix64& rng) {
  if (n == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
  std::vector<double> p(n);
  double total = 0.0;
  for (double& x : p) {
    x = -std::log(rng.uniform_open());
    total += x;
  }
  for (double& x : p) x /= total;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

SampledDensity sample_density(std::size_t n, SplitMix64& rng) {
  const auto p = sample_simplex_sorted(n, rng);
  const auto u = haar_unitary(n, rng);
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = p[i];
  return SampledDensity{DensityMatrix(u * d * u.adjoint()), p, u};
}

DensityMatrix random_density(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_density(n, rng).rho;
}

DensityMatrix random_density(std::size_t n, const std::vector<double>& spectrum,
                             std::uint64_t seed) {
  if (spectrum.size() != n) {
    throw Error(ErrorCode::BadSpectrum, "spectrum length differs from n");
  }
  double total = 0.0;
  for (double p : spectrum) {
    if (!std::isfinite(p) || p < -1e-12) {
      throw Error(ErrorCode::BadSpectrum, "spectrum entries must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::BadSpectrum, "spectrum must sum to one");
  }
  SplitMix64 rng(seed);
  const auto u = haar_unitary(n, rng);
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::max(spectrum[i], 0.0);
  return DensityMatrix(u * d * u.adjoint());
}

}  // namespace majq
