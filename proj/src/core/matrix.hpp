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

#ifndef MAJQ_CORE_MATRIX_HPP
#define MAJQ_CORE_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "core/error.hpp"
#include "core/tolerances.hpp"

namespace majq {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Sized for small dimensions (n <= 16 on the
// operator side, n^2 on the Choi side); no attempt at blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, (a ⊗ b)[(i1,i2),(j1,j2)] = a[i1,j1] b[i2,j2].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Row-major flattening |K⟩⟩ of a square matrix: component i*n + j is K[i,j].
// This matches (K ⊗ 1) Σ_j |jj⟩ in the fixed computational basis.
std::vector<Complex> vectorize(const ComplexMatrix& k);

// Inverse of vectorize; the length must be a perfect square.
ComplexMatrix devectorize(const std::vector<Complex>& v);

// Partial traces of an n^2 x n^2 matrix over the first / second tensor
// factor; both return n x n.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t n);
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t n);

// Transpose on the second tensor factor of an n^2 x n^2 matrix.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m, std::size_t n);

// Square matrix within the Hermiticity tolerance. The wrapped matrix is kept
// exactly as given; validation only gates construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double tol = kTol.hermiticity);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

}  // namespace majq

#endif  // MAJQ_CORE_MATRIX_HPP
