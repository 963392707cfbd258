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

#ifndef MAJQ_CORE_EIG_HPP_
#define MAJQ_CORE_EIG_HPP_

#include <vector>

#include "core/matrix.hpp"

namespace majq {

// Spectral decomposition A = V diag(w) V† of a Hermitian matrix.
// Eigenvalues are sorted descending; column j of `eigenvectors` pairs with
// eigenvalues[j]. Each eigenvector's largest-magnitude component is made
// real and positive so the decomposition is reproducible.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Cyclic Jacobi for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 * ||A||_F; throws
// NoConvergence after 100 sweeps.
EigenDecomposition hermitian_eig(const HermitianMatrix& a);

// Convenience overload; validates Hermiticity first.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

// Smallest eigenvalue >= -tol.
bool is_psd(const HermitianMatrix& a, double tol);

// M^{-1/2} for Hermitian positive definite M. Eigenvalues must exceed tol.
ComplexMatrix inverse_sqrt(const HermitianMatrix& m, double tol = 1e-12);

}  // namespace majq

#endif  // MAJQ_CORE_EIG_HPP_
