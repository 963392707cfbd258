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

#include "core/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "core/eig.hpp"

namespace majq {

namespace {

void canonical_phase(ComplexMatrix& m) {
  Complex top = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > std::abs(top)) top = m(i, j);
    }
  if (std::abs(top) == 0.0) return;
  m *= std::conj(top) / std::abs(top);
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

std::vector<Complex> column_vector(const ComplexMatrix& m, std::size_t j) {
  std::vector<Complex> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

struct Cluster {
  double value;  // mean
  std::size_t count;
  std::size_t first;  // column index of the first member, eigenvalues descending
};

std::vector<Cluster> cluster_spectrum(const std::vector<double>& w, double gap) {
  std::vector<Cluster> out;
  std::size_t start = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    const bool last = (i + 1 == w.size());
    if (last || w[i] - w[i + 1] > gap) {
      out.push_back(Cluster{sum / double(i - start + 1), i - start + 1, start});
      start = i + 1;
      sum = 0.0;
    }
  }
  return out;
}

// Misfit of the sorted spectrum against a two-level pattern with the given
// leading multiplicity: the largest in-group spread, minimized over both
// orientations.
double pattern_misfit(const std::vector<double>& w, std::size_t head) {
  const auto spread = [&](std::size_t begin, std::size_t end) {
    return (end > begin) ? w[begin] - w[end - 1] : 0.0;
  };
  const std::size_t n2 = w.size();
  const double a = std::max(spread(0, head), spread(head, n2));
  const double b = std::max(spread(0, n2 - head), spread(n2 - head, n2));
  return std::min(a, b);
}

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
  if (dim_ == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
  if (kraus_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "channel needs at least one Kraus operator");
  }
  ComplexMatrix sum(dim_, dim_);
  for (const auto& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operator has wrong shape");
    }
    sum += k.adjoint() * k;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(dim_));
  if (dev > kTol.kraus_tp) {
    throw Error(ErrorCode::NotTP,
                "||ΣK†K − 1||_max = " + std::to_string(dev));
  }
}

ChoiMatrix::ChoiMatrix(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0) throw Error(ErrorCode::BadDimension, "dimension must be positive");
  if (matrix_.rows() != dim_ * dim_ || matrix_.cols() != dim_ * dim_) {
    throw Error(ErrorCode::DimensionMismatch, "Choi matrix must be n² × n²");
  }
  HermitianMatrix check(matrix_, kTol.hermiticity);
  const double tp_dev = max_abs_diff(partial_trace_first(matrix_, dim_),
                                     ComplexMatrix::identity(dim_));
  if (tp_dev > kTol.choi_tp) {
    throw Error(ErrorCode::NotTP,
                "||Tr₁J − 1||_max = " + std::to_string(tp_dev));
  }
  if (std::abs(matrix_.trace().real() - double(dim_)) > kTol.choi_tp) {
    throw Error(ErrorCode::NotTP, "Choi trace differs from n");
  }
}

ComplexMatrix apply_raw(const KrausChannel& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.dim() || x.cols() != phi.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state has wrong dimension");
  }
  ComplexMatrix out(phi.dim(), phi.dim());
  for (const auto& k : phi.kraus()) out += k * x * k.adjoint();
  return out;
}

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(phi, rho.matrix()));
}

ChoiMatrix choi(const KrausChannel& phi) {
  const std::size_t n = phi.dim();
  ComplexMatrix j(n * n, n * n);
  for (const auto& k : phi.kraus()) {
    const auto v = vectorize(k);
    for (std::size_t r = 0; r < n * n; ++r) {
      if (v[r] == Complex{}) continue;
      for (std::size_t c = 0; c < n * n; ++c) j(r, c) += v[r] * std::conj(v[c]);
    }
  }
  return ChoiMatrix(n, std::move(j));
}

std::vector<ComplexMatrix> kraus_factors(const ComplexMatrix& j, double tol) {
  const auto eig = hermitian_eig(j);
  std::vector<ComplexMatrix> out;
  for (std::size_t c = 0; c < eig.eigenvalues.size(); ++c) {
    const double gamma = eig.eigenvalues[c];
    if (gamma <= tol) continue;
    auto k = devectorize(column_vector(eig.eigenvectors, c));
    k *= std::sqrt(gamma);
    out.push_back(std::move(k));
  }
  return out;
}

KrausChannel kraus_from_choi(const ChoiMatrix& j, double tol) {
  const auto eig = hermitian_eig(j.matrix());
  if (eig.eigenvalues.back() < -tol) {
    throw Error(ErrorCode::NotCP,
                "Choi eigenvalue " + std::to_string(eig.eigenvalues.back()));
  }
  std::vector<ComplexMatrix> kraus;
  for (std::size_t c = 0; c < eig.eigenvalues.size(); ++c) {
    const double gamma = eig.eigenvalues[c];
    if (gamma <= tol) continue;
    auto k = devectorize(column_vector(eig.eigenvectors, c));
    k *= std::sqrt(gamma);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(j.dim(), std::move(kraus));
}

bool is_cp(const ChoiMatrix& j, double tol) {
  return hermitian_eig(j.matrix()).eigenvalues.back() >= -tol;
}

ComplexMatrix swap_operator(std::size_t n) {
  ComplexMatrix s(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) s(a * n + b, b * n + a) = 1.0;
  return s;
}

ComplexMatrix choi_constant(const ComplexMatrix& omega) {
  return kron(omega, ComplexMatrix::identity(omega.rows()));
}

ComplexMatrix choi_dep_unitary(double lambda, const ComplexMatrix& u) {
  const std::size_t n = u.rows();
  const auto v = vectorize(u);
  ComplexMatrix j(n * n, n * n);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) j(r, c) = lambda * v[r] * std::conj(v[c]);
  const double mu = (1.0 - lambda) / double(n);
  for (std::size_t r = 0; r < n * n; ++r) j(r, r) += mu;
  return j;
}

ComplexMatrix choi_dep_transpose(double lambda, const ComplexMatrix& u) {
  const std::size_t n = u.rows();
  const ComplexMatrix ui = kron(u, ComplexMatrix::identity(n));
  ComplexMatrix j = ui * swap_operator(n) * ui.adjoint();
  j *= lambda;
  const double mu = (1.0 - lambda) / double(n);
  for (std::size_t r = 0; r < n * n; ++r) j(r, r) += mu;
  return j;
}

LambdaRange lambda_range(FamilyKind kind, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "λ ranges need n ≥ 2");
  const double dn = double(n);
  if (kind == FamilyKind::Unitary) {
    return LambdaRange{kind, n, -1.0 / (dn * dn - 1.0), 1.0};
  }
  return LambdaRange{kind, n, -1.0 / (dn - 1.0), 1.0 / (dn + 1.0)};
}

KrausChannel constant_channel(const DensityMatrix& omega) {
  return kraus_from_choi(ChoiMatrix(omega.dim(), choi_constant(omega.matrix())));
}

namespace {

KrausChannel depolarized(FamilyKind kind, double lambda, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() < 2) {
    throw Error(ErrorCode::BadDimension, "U must be square with n ≥ 2");
  }
  if (!is_unitary(u, kTol.unitarity)) {
    throw Error(ErrorCode::NotUnitary, "U fails the unitarity tolerance");
  }
  const auto range = lambda_range(kind, u.rows());
  if (lambda < range.lo - 1e-12 || lambda > range.hi + 1e-12) {
    throw Error(ErrorCode::LambdaOutOfRange,
                "λ = " + std::to_string(lambda) + " outside [" +
                    std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
  }
  const auto j = (kind == FamilyKind::Unitary) ? choi_dep_unitary(lambda, u)
                                               : choi_dep_transpose(lambda, u);
  return kraus_from_choi(ChoiMatrix(u.rows(), j));
}

}  // namespace

KrausChannel depolarized_unitary(double lambda, const ComplexMatrix& u) {
  return depolarized(FamilyKind::Unitary, lambda, u);
}

KrausChannel depolarized_transpose(double lambda, const ComplexMatrix& u) {
  return depolarized(FamilyKind::Transpose, lambda, u);
}

const char* channel_class_name(ChannelClass::Tag tag) {
  switch (tag) {
    case ChannelClass::Tag::Constant: return "constant";
    case ChannelClass::Tag::DepUnitary: return "dep-unitary";
    case ChannelClass::Tag::DepTranspose: return "dep-transpose";
    case ChannelClass::Tag::Other: return "other";
  }
  return "other";
}

ChannelClass classify_channel(const KrausChannel& phi, double tol) {
  const std::size_t n = phi.dim();
  const ComplexMatrix j = choi(phi).matrix();
  const auto eig = hermitian_eig(j);

  ChannelClass out;
  out.min_choi_eigenvalue = eig.eigenvalues.back();

  // (1) Constant: J = ω ⊗ 𝟙. Catches λ ≈ 0 of both families, which is the
  // completely depolarizing channel; this precedence keeps the overlap
  // deterministic.
  {
    ComplexMatrix omega = partial_trace_second(j, n);
    omega *= 1.0 / double(n);
    if (max_abs_diff(j, choi_constant(omega)) <= tol) {
      out.tag = ChannelClass::Tag::Constant;
      out.residual = max_abs_diff(j, choi_constant(omega));
      out.omega = DensityMatrix(omega);
      return out;
    }
  }

  const auto clusters = cluster_spectrum(eig.eigenvalues, 1e3 * tol);

  // (2) DepUnitary: one isolated eigenvalue λn + (1−λ)/n against a flat bulk
  // of n²−1 copies of (1−λ)/n; the isolated eigenvector is |U⟩⟩/√n.
  if (clusters.size() == 2) {
    const std::size_t c_single = (clusters[0].count == 1) ? 0
                                 : (clusters[1].count == 1) ? 1
                                                            : 2;
    if (c_single < 2) {
      const Cluster& single = clusters[c_single];
      const Cluster& bulk = clusters[1 - c_single];
      if (bulk.count == n * n - 1) {
        const double mu = bulk.value;
        const double lambda = 1.0 - double(n) * mu;
        ComplexMatrix u = devectorize(column_vector(eig.eigenvectors, single.first));
        u *= std::sqrt(double(n));
        if (is_unitary(u, 1e3 * tol)) {
          canonical_phase(u);
          const double res = max_abs_diff(j, choi_dep_unitary(lambda, u));
          if (res <= tol) {
            out.tag = ChannelClass::Tag::DepUnitary;
            out.lambda = lambda;
            out.unitary = u;
            out.residual = res;
            out.spectrum_residual =
                std::abs(single.value - (lambda * double(n) + mu));
            if (n == 2) {
              // Qubit overlap: λUρU† + (1−λ)𝟙/2 = (−λ)(UY)ρᵀ(UY)† + (1+λ)𝟙/2.
              ComplexMatrix y(2, 2);
              y(0, 1) = Complex(0.0, -1.0);
              y(1, 0) = Complex(0.0, 1.0);
              ComplexMatrix alt = u * y;
              canonical_phase(alt);
              out.alternate = ChannelClass::AlternateForm{
                  ChannelClass::Tag::DepTranspose, -lambda, std::move(alt)};
            }
            return out;
          }
        }
      }
    }
  }

  // (3) DepTranspose: the SWAP eigenspaces show up as multiplicities
  // n(n+1)/2 and n(n−1)/2; stripping the flat part and partial-transposing
  // the second factor leaves the rank-one |U⟩⟩⟨⟨U|.
  if (clusters.size() == 2) {
    const std::size_t m_plus = n * (n + 1) / 2;
    const std::size_t m_minus = n * (n - 1) / 2;
    const std::size_t c_plus = (clusters[0].count == m_plus) ? 0
                               : (clusters[1].count == m_plus) ? 1
                                                               : 2;
    if (c_plus < 2 && clusters[1 - c_plus].count == m_minus) {
      const double s_plus = clusters[c_plus].value;
      const double s_minus = clusters[1 - c_plus].value;
      const double lambda = 0.5 * (s_plus - s_minus);
      const double mu = 0.5 * (s_plus + s_minus);
      if (std::abs(lambda) > tol) {
        ComplexMatrix s = j;
        for (std::size_t r = 0; r < n * n; ++r) s(r, r) -= mu;
        s *= 1.0 / lambda;
        const auto pt = hermitian_eig(partial_transpose_second(s, n));
        ComplexMatrix u = devectorize(column_vector(pt.eigenvectors, 0));
        u *= std::sqrt(double(n));
        if (std::abs(pt.eigenvalues.front() - double(n)) <= 1e3 * tol * double(n) &&
            is_unitary(u, 1e3 * tol)) {
          canonical_phase(u);
          const double res = max_abs_diff(j, choi_dep_transpose(lambda, u));
          if (res <= tol) {
            out.tag = ChannelClass::Tag::DepTranspose;
            out.lambda = lambda;
            out.unitary = u;
            out.residual = res;
            out.spectrum_residual = std::abs(mu - (1.0 - lambda) / double(n));
            if (n == 2) {
              ComplexMatrix y(2, 2);
              y(0, 1) = Complex(0.0, -1.0);
              y(1, 0) = Complex(0.0, 1.0);
              ComplexMatrix alt = u * y;
              canonical_phase(alt);
              out.alternate = ChannelClass::AlternateForm{
                  ChannelClass::Tag::DepUnitary, -lambda, std::move(alt)};
            }
            return out;
          }
        }
      }
    }
  }

  out.tag = ChannelClass::Tag::Other;
  out.spectrum_residual = std::min(pattern_misfit(eig.eigenvalues, 1),
                                   pattern_misfit(eig.eigenvalues, n * (n + 1) / 2));
  return out;
}

double phase_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix comparison shape mismatch");
  }
  Complex inner = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) inner += std::conj(b(i, c)) * a(i, c);
  const Complex phase =
      (std::abs(inner) == 0.0) ? Complex(1.0) : inner / std::abs(inner);
  return max_abs_diff(a, phase * b);
}

}  // namespace majq
