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

#include "core/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>

#include "core/eig.hpp"

namespace majq {

namespace {

void require_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::InvalidArgument, "vector has NaN or Inf entries");
    }
  }
}

// Inverse argsort: sigma with sigma(idx[k]) = k, so P_sigma applied to v
// yields the decreasing rearrangement.
std::vector<std::size_t> sort_permutation(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
  std::vector<std::size_t> sigma(v.size());
  for (std::size_t k = 0; k < idx.size(); ++k) sigma[idx[k]] = k;
  return sigma;
}

}  // namespace

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidArgument,
                "entry count does not match rows x cols");
  }
  require_finite(data_);
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> RealMatrix::apply(const std::vector<double>& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorCode::LengthMismatch, "matrix-vector shape mismatch");
  }
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

ComplexMatrix RealMatrix::to_complex() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix comparison shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t x : image_) {
    if (x >= image_.size() || seen[x]) {
      throw Error(ErrorCode::InvalidArgument, "image is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::random(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(image[i - 1], image[rng.below(i)]);
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = j;
  return Permutation(std::move(inv));
}

RealMatrix Permutation::matrix() const {
  RealMatrix p(size(), size());
  for (std::size_t j = 0; j < size(); ++j) p(image_[j], j) = 1.0;
  return p;
}

ComplexMatrix Permutation::complex_matrix() const {
  ComplexMatrix p(size(), size());
  for (std::size_t j = 0; j < size(); ++j) p(image_[j], j) = 1.0;
  return p;
}

std::vector<double> Permutation::apply(const std::vector<double>& v) const {
  if (v.size() != size()) {
    throw Error(ErrorCode::LengthMismatch, "permutation length mismatch");
  }
  std::vector<double> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[image_[j]] = v[j];
  return out;
}

std::vector<double> decreasing_rearrangement(std::vector<double> v) {
  require_finite(v);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool majorizes_vec(const std::vector<double>& u, const std::vector<double>& v,
                   double tol) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::LengthMismatch, "vectors differ in length");
  }
  if (u.empty()) {
    throw Error(ErrorCode::InvalidArgument, "vectors must be nonempty");
  }
  const auto ud = decreasing_rearrangement(u);
  const auto vd = decreasing_rearrangement(v);
  double su = 0.0;
  double sv = 0.0;
  for (std::size_t k = 0; k + 1 < ud.size(); ++k) {
    su += ud[k];
    sv += vd[k];
    if (su > sv + tol) return false;
  }
  su += ud.back();
  sv += vd.back();
  return std::abs(su - sv) <= tol * std::max(1.0, std::abs(sv));
}

bool is_bistochastic(const RealMatrix& b, double tol) {
  if (!b.is_square()) {
    throw Error(ErrorCode::NonSquare, "bistochastic test needs a square matrix");
  }
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) < -tol || b(j, i) < -tol) return false;
      row += b(i, j);
      col += b(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

RealMatrix hlp_witness(const std::vector<double>& u, const std::vector<double>& v) {
  if (!majorizes_vec(u, v)) {
    throw Error(ErrorCode::NotMajorized, "u is not majorized by v");
  }
  const std::size_t n = u.size();
  const auto sigma_u = sort_permutation(u);
  const auto sigma_v = sort_permutation(v);
  const auto ud = decreasing_rearrangement(u);
  std::vector<double> w = decreasing_rearrangement(v);

  double scale = 1.0;
  for (double x : w) scale = std::max(scale, std::abs(x));
  const double eps = 1e-13 * scale;

  // Move w toward ud one T-transform at a time. j is the last coordinate
  // where w still exceeds the target, k the first later one where it falls
  // short; mixing them fixes at least one coordinate per step and keeps both
  // sortedness and ud ≺ w intact.
  RealMatrix m = RealMatrix::identity(n);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (w[i] - ud[i] > eps) {
        j = i;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (ud[i] - w[i] > eps) {
        k = i;
        break;
      }
    }
    if (k == n) break;

    const double delta = std::min(w[j] - ud[j], ud[k] - w[k]);
    const double t = 1.0 - delta / (w[j] - w[k]);

    const double wj = w[j];
    const double wk = w[k];
    w[j] = t * wj + (1.0 - t) * wk;
    w[k] = t * wk + (1.0 - t) * wj;
    for (std::size_t col = 0; col < n; ++col) {
      const double mj = m(j, col);
      const double mk = m(k, col);
      m(j, col) = t * mj + (1.0 - t) * mk;
      m(k, col) = t * mk + (1.0 - t) * mj;
    }
  }

  // B = P_{σu}⁻¹ M P_{σv}, entrywise B[i][l] = M[σu(i)][σv(l)].
  RealMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) b(i, l) = m(sigma_u[i], sigma_v[l]);
  return b;
}

VectorMapClass classify_vector_map(const RealMatrix& t, double tol) {
  if (!t.is_square()) {
    throw Error(ErrorCode::NonSquare, "vector map must be square");
  }
  const std::size_t n = t.rows();
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "classification needs n >= 2");
  }

  VectorMapClass out;

  // Form (i): all columns equal.
  bool trace_form = true;
  for (std::size_t i = 0; i < n && trace_form; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      if (std::abs(t(i, j) - t(i, 0)) > tol) {
        trace_form = false;
        break;
      }
    }
  if (trace_form) {
    out.tag = VectorMapClass::Tag::TraceForm;
    out.a.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += t(i, j);
      out.a[i] = s / double(n);
    }
    return out;
  }

  // Form (ii): T = αP + βE. Each column is constant β except one spike α+β;
  // spike rows must form a permutation. With n = 2 both entries are
  // candidate spikes, so try both permutations of S₂.
  const auto try_spikes = [&](const std::vector<std::size_t>& spike) -> bool {
    std::vector<bool> seen(n, false);
    for (std::size_t r : spike) {
      if (seen[r]) return false;
      seen[r] = true;
    }
    double beta = 0.0;
    double alpha = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (i == spike[j]) continue;
        beta += t(i, j);
      }
    beta /= double(n * n - n);
    for (std::size_t j = 0; j < n; ++j) alpha += t(spike[j], j) - beta;
    alpha /= double(n);

    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        const double want = beta + (i == spike[j] ? alpha : 0.0);
        if (std::abs(t(i, j) - want) > tol) return false;
      }
    out.tag = VectorMapClass::Tag::ScaledPermutation;
    out.alpha = alpha;
    out.beta = beta;
    out.perm = spike;
    return true;
  };

  if (n == 2) {
    if (try_spikes({0, 1}) || try_spikes({1, 0})) return out;
  } else {
    // Spike = the entry farthest from the column median-like bulk. The bulk
    // value β is shared across all columns, so use the global mode: with
    // n ≥ 3 strictly more than half of each column is β.
    std::vector<std::size_t> spike(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = t(i, j);
      auto sorted = col;
      std::sort(sorted.begin(), sorted.end());
      const double mid = sorted[n / 2];
      std::size_t best = 0;
      double dev = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(col[i] - mid) > dev) {
          dev = std::abs(col[i] - mid);
          best = i;
        }
      }
      spike[j] = best;
    }
    if (try_spikes(spike)) return out;
  }

  out.tag = VectorMapClass::Tag::Other;
  return out;
}

bool majorizes_op(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operators differ in dimension");
  }
  const auto ea = hermitian_eig(a);
  const auto eb = hermitian_eig(b);
  return majorizes_vec(ea.eigenvalues, eb.eigenvalues, tol);
}

}  // namespace majq
