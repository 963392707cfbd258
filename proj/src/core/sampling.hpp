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

#ifndef MAJQ_CORE_SAMPLING_HPP_
#define MAJQ_CORE_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "core/density.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"

namespace majq {

// Haar-distributed unitary: complex Ginibre matrix, Householder QR, then
// U = Q diag(R_kk / |R_kk|) so the effective R has a positive real diagonal.
ComplexMatrix haar_unitary(std::size_t n, SplitMix64& rng);

ComplexMatrix random_haar_unitary(std::size_t n, std::uint64_t seed);

// Point on the probability simplex via normalized exponentials, returned
// sorted descending.
std::vector<double> sample_simplex_sorted(std::size_t n, SplitMix64& rng);

struct SampledDensity {
  DensityMatrix rho;
  std::vector<double> spectrum;  // descending, as drawn
  ComplexMatrix unitary;
};

// rho = U diag(p) U† with p from the simplex sampler and U Haar.
SampledDensity sample_density(std::size_t n, SplitMix64& rng);

DensityMatrix random_density(std::size_t n, std::uint64_t seed);

// Same with a caller-supplied spectrum: entries ≥ 0 summing to 1.
DensityMatrix random_density(std::size_t n, const std::vector<double>& spectrum,
                             std::uint64_t seed);

}  // namespace majq

#endif  // MAJQ_CORE_SAMPLING_HPP_
