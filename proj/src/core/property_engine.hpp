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

#ifndef MAJQ_CORE_PROPERTY_ENGINE_HPP_
#define MAJQ_CORE_PROPERTY_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/channel.hpp"
#include "core/density.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace majq {

// S(ρ) = −Tr ρ log₂ ρ in bits, with 0·log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

struct Counterexample {
  std::uint64_t trial;
  ComplexMatrix lhs;
  ComplexMatrix rhs;
  std::string diagnostics;
};

// Aggregate of a seeded Monte-Carlo run. Per-trial seeds come from
// trial_seed(seed, index), so trials are order-independent and the first
// counterexample is the one with the lowest index.
struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  double elapsed_s = 0.0;
  std::optional<Counterexample> counterexample;
};

// lower ≺ upper, checked at construction.
struct MajorizationPair {
  MajorizationPair(DensityMatrix lower_in, DensityMatrix upper_in);

  DensityMatrix lower;
  DensityMatrix upper;
};

// σ random; its spectrum pushed through a random bistochastic map (convex
// combination of ≤ n² permutations) and re-dressed with a fresh Haar basis.
MajorizationPair sample_majorization_pair(std::size_t n, SplitMix64& rng);
MajorizationPair sample_majorization_pair(std::size_t n, std::uint64_t seed);

// Φ(ρ) ≺ Φ(σ) for sampled ρ ≺ σ.
TrialReport test_preservation(const KrausChannel& phi, std::uint64_t trials,
                              std::uint64_t seed);

// Even trials: sampled pairs with a sorted-spectrum gap above
// kTol.entropy_strict_gap must show a strictly larger entropy on the
// majorized side; gaps down to kTol.spectra_equal still must not show an
// entropy increase. Odd trials: equal spectra must give equal entropy.
TrialReport test_li_property(std::size_t n, std::uint64_t trials,
                             std::uint64_t seed);

// Sorted spectra agree entrywise within tol.
bool unitary_orbit_equivalent(const DensityMatrix& a, const DensityMatrix& b,
                              double tol = kTol.spectra_equal);

// Φ(Uρ₀U†) ∼ Φ(ρ₀) over Haar U. Requires a nondegenerate ρ₀ and a unital Φ.
TrialReport test_orbit_preservation(const KrausChannel& phi,
                                    const DensityMatrix& rho0,
                                    std::uint64_t trials, std::uint64_t seed);

// Unital-TP channel by alternating projections: average the channel with its
// adjoint (halves the unitality defect), compress the Kraus set through the
// Choi rank, rescale to TP; iterate until the defect is ≤ 1e−9 and accept at
// unitality and TP residuals ≤ 1e−8.
KrausChannel random_unital_channel(std::size_t n, std::size_t kraus_count,
                                   SplitMix64& rng);
KrausChannel random_unital_channel(std::size_t n, std::size_t kraus_count,
                                   std::uint64_t seed);

struct ExplorerRow {
  std::size_t id = 0;
  std::string construction;   // dep-unitary | dep-transpose | random-unital
  bool preserved = false;
  std::uint64_t failures = 0;
  std::string channel_class;  // classification tag, "-" when not classified
  double lambda = 0.0;        // NaN when not applicable
  double residual = 0.0;      // NaN when not applicable
};

struct ExplorerSummary {
  std::size_t dim = 0;
  std::uint64_t channel_samples = 0;
  std::uint64_t trials_per_channel = 0;
  std::uint64_t seed = 0;
  double elapsed_s = 0.0;
  std::vector<ExplorerRow> rows;
};

// d ≥ 3 sweep: a third each of constructed dep-unitary, constructed
// dep-transpose, and random unital channels, run through the orbit test
// against ρ₀ ∝ diag(d, d−1, …, 1); survivors are classified. The summary
// reports, it does not prove.
ExplorerSummary conjecture_explorer(std::size_t d, std::size_t channel_samples,
                                    std::uint64_t trials_per_channel,
                                    std::uint64_t seed);

}  // namespace majq

#endif  // MAJQ_CORE_PROPERTY_ENGINE_HPP_
