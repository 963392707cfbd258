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

#ifndef MAJQ_CORE_BIRKHOFF_HPP_
#define MAJQ_CORE_BIRKHOFF_HPP_

#include <vector>

#include "core/majorization.hpp"
#include "core/matrix.hpp"
#include "core/tolerances.hpp"

namespace majq {

struct BirkhoffTerm {
  double weight;
  Permutation permutation;
};

// B = Σ w_k P_{π_k}: weights in (0,1] summing to 1, at most (n−1)² + 1 terms.
struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  RealMatrix reconstruct() const;
};

// Bottleneck extraction: at each step take a perfect matching on the
// largest threshold whose support still admits one, subtract the smallest
// matched entry times that permutation, repeat until the residual mass is
// ≤ n·tol. Heaviest-first keeps the term list short and deterministic.
BirkhoffDecomposition birkhoff_decompose(const RealMatrix& b,
                                         double tol = kTol.bistochastic);

struct MixedUnitaryTerm {
  double weight;
  ComplexMatrix unitary;
};

// A = Σ pⱼ Uⱼ B Uⱼ† to within 1e−8 per entry; weights form a distribution.
struct MixedUnitaryWitness {
  std::vector<MixedUnitaryTerm> terms;

  ComplexMatrix apply_to(const ComplexMatrix& b) const;
};

// Transport the HLP witness through the eigenbases: with A = V diag(a) V†
// and B = W diag(b) W†, Birkhoff-decompose the bistochastic D carrying b to
// a and return terms (w_k, V P_k W†).
MixedUnitaryWitness mixed_unitary_witness(const HermitianMatrix& a,
                                          const HermitianMatrix& b);

}  // namespace majq

#endif  // MAJQ_CORE_BIRKHOFF_HPP_
