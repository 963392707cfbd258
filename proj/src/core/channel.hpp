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

#ifndef MAJQ_CORE_CHANNEL_HPP_
#define MAJQ_CORE_CHANNEL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/density.hpp"
#include "core/matrix.hpp"
#include "core/tolerances.hpp"

namespace majq {

// Trace-preserving map in Kraus form: Σ K†_μ K_μ = 𝟙 within tolerance.
class KrausChannel {
 public:
  KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> kraus_;
};

// n²×n² Choi matrix: Hermitian, trace n, partial trace over the first
// factor 𝟙ₙ. Positivity is not an invariant; is_cp decides it.
class ChoiMatrix {
 public:
  ChoiMatrix(std::size_t dim, ComplexMatrix matrix);

  std::size_t dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t dim_;
  ComplexMatrix matrix_;
};

// Σ K X K† on a bare operator (no density validation; used for Φ(𝟙)).
ComplexMatrix apply_raw(const KrausChannel& phi, const ComplexMatrix& x);

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho);

// J(Φ) = Σ_μ |K_μ⟩⟩⟨⟨K_μ| under the row-major vectorize convention.
ChoiMatrix choi(const KrausChannel& phi);

// Eigendecompose J and keep K = √γ·devectorize(v) for eigenvalues γ > tol.
// No TP validation; building block for kraus_from_choi and the samplers.
std::vector<ComplexMatrix> kraus_factors(const ComplexMatrix& j, double tol);

KrausChannel kraus_from_choi(const ChoiMatrix& j, double tol = kTol.cp);

bool is_cp(const ChoiMatrix& j, double tol = kTol.cp);

// Choi of the transpose map: SWAP|a,b⟩ = |b,a⟩, eigenvalues ±1.
ComplexMatrix swap_operator(std::size_t n);

// Raw Choi matrices of the three families (no λ-range enforcement; the
// boundary experiments probe outside the CP region on purpose).
ComplexMatrix choi_constant(const ComplexMatrix& omega);
ComplexMatrix choi_dep_unitary(double lambda, const ComplexMatrix& u);
ComplexMatrix choi_dep_transpose(double lambda, const ComplexMatrix& u);

enum class FamilyKind { Unitary, Transpose };

struct LambdaRange {
  FamilyKind kind;
  std::size_t dim;
  double lo;
  double hi;
};

// Unitary → [−1/(n²−1), 1]; Transpose → [−1/(n−1), 1/(n+1)]. Both ends of
// both intervals give a CP channel with a zero Choi eigenvalue.
LambdaRange lambda_range(FamilyKind kind, std::size_t n);

// Φ(ρ) = ω for every ρ.
KrausChannel constant_channel(const DensityMatrix& omega);

// Φ(ρ) = λUρU† + (1−λ)𝟙/n.
KrausChannel depolarized_unitary(double lambda, const ComplexMatrix& u);

// Φ(ρ) = λUρᵀU† + (1−λ)𝟙/n, transpose in the computational basis.
KrausChannel depolarized_transpose(double lambda, const ComplexMatrix& u);

// Result of deciding which closed form (if any) a channel takes. For qubits
// the two depolarized families parameterize the same channels, so the
// unitary reading wins and `alternate` carries the transpose reading.
struct ChannelClass {
  enum class Tag { Constant, DepUnitary, DepTranspose, Other };

  struct AlternateForm {
    Tag tag;
    double lambda;
    ComplexMatrix unitary;
  };

  Tag tag = Tag::Other;
  std::optional<DensityMatrix> omega;       // Constant
  double lambda = 0.0;                      // DepUnitary / DepTranspose
  ComplexMatrix unitary{0, 0};              // DepUnitary / DepTranspose
  std::optional<AlternateForm> alternate;   // qubit overlap only
  double residual = 0.0;                    // Choi reconstruction error
  double min_choi_eigenvalue = 0.0;         // Other diagnostics
  double spectrum_residual = 0.0;
};

const char* channel_class_name(ChannelClass::Tag tag);

ChannelClass classify_channel(const KrausChannel& phi, double tol = kTol.classify);

// min over global phase θ of ‖a − e^{iθ}b‖_max, with θ chosen by the
// Frobenius inner product.
double phase_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace majq

#endif  // MAJQ_CORE_CHANNEL_HPP_
