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

#ifndef MAJQ_CORE_TOLERANCES_HPP
#define MAJQ_CORE_TOLERANCES_HPP

namespace majq {

// All default tolerances live here. Values are absolute unless a call site
// says otherwise.
struct Tolerances {
  double hermiticity = 1e-12;        // max-norm of A - A†
  double density_psd = 1e-10;        // smallest eigenvalue of a state
  double density_trace = 1e-10;      // |trace - 1| of a state
  double eig_reconstruction = 1e-9;  // ||A - V diag V†||_max
  double unitarity = 1e-9;           // ||U†U - 1||_max
  double majorization = 1e-9;        // prefix-sum comparisons
  double bistochastic = 1e-9;        // entry sign and row/col sums
  double kraus_tp = 1e-9;            // per-entry sum K†K - 1
  double choi_tp = 1e-8;             // partial-trace condition on a Choi matrix
  double cp = 1e-9;                  // smallest Choi eigenvalue in is_psd/is_cp
  double witness = 1e-8;             // mixed-unitary witness reconstruction
  double classify = 1e-7;            // channel classifier reconstruction
  double spectra_equal = 1e-8;       // entrywise sorted-spectrum comparison
  double entropy_equal = 1e-9;       // entropy comparisons, in bits
  // Spectrum gap above which a strict entropy drop is certifiable. Mixing
  // sorted spectra at max-gap g raises entropy by at least 2 g^2 / ln 2
  // (Pinsker through the relative entropy to the pushed spectrum), so gaps
  // above 1e-4 force a drop of at least 2.8e-8 bits, well clear of
  // entropy_equal. Between spectra_equal and this margin the sign of the
  // difference is real but smaller than entropy_equal, so only monotonicity
  // can be asserted.
  double entropy_strict_gap = 1e-4;
  double unital = 1e-8;              // ||Phi(1) - 1||_max
  double spectrum_gap = 1e-6;        // nondegeneracy of a fixed state's spectrum
};

inline constexpr Tolerances kTol{};

}  // namespace majq

#endif  // MAJQ_CORE_TOLERANCES_HPP
