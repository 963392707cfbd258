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

#include "core/matrix.hpp"

#include <cmath>
#include <utility>

namespace majq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::InvalidArgument,
                "entry count does not match rows x cols");
  }
  if (!all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has NaN or Inf entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NonSquare, "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix subtraction shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix comparison shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex aij = a(i1, j1);
      if (aij == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          c(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
    }
  return c;
}

std::vector<Complex> vectorize(const ComplexMatrix& k) {
  if (!k.is_square()) {
    throw Error(ErrorCode::NonSquare, "vectorize needs a square matrix");
  }
  return k.data();
}

ComplexMatrix devectorize(const std::vector<Complex>& v) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(v.size()))));
  if (n * n != v.size()) {
    throw Error(ErrorCode::NonSquare, "vector length is not a perfect square");
  }
  return ComplexMatrix(n, n, v);
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() != n * n || m.cols() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "partial trace shape mismatch");
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out(i, j) += m(k * n + i, k * n + j);
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() != n * n || m.cols() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "partial trace shape mismatch");
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out(i, j) += m(i * n + k, j * n + k);
  return out;
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m, std::size_t n) {
  if (m.rows() != n * n || m.cols() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "partial transpose shape mismatch");
  }
  ComplexMatrix out(n * n, n * n);
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = 0; j2 < n; ++j2)
          out(i1 * n + j2, j1 * n + i2) = m(i1 * n + i2, j1 * n + j2);
  return out;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tol)
    : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw Error(ErrorCode::NonSquare, "Hermitian matrix must be square");
  }
  if (!matrix_.all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has NaN or Inf entries");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = i; j < matrix_.cols(); ++j)
      dev = std::max(dev, std::abs(matrix_(i, j) - std::conj(matrix_(j, i))));
  if (dev > tol) {
    throw Error(ErrorCode::NonHermitian,
                "||A - A†||_max = " + std::to_string(dev));
  }
}

}  // namespace majq
