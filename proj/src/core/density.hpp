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

#ifndef MAJQ_CORE_DENSITY_HPP_
#define MAJQ_CORE_DENSITY_HPP_

#include <vector>

#include "core/eig.hpp"
#include "core/matrix.hpp"
#include "core/tolerances.hpp"

namespace majq {

// Validated density matrix: Hermitian, unit trace, PSD up to tolerance.
// Stores its spectral decomposition since nearly every consumer needs it.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.rows(); }

  // Descending; clamped to [0, 1].
  const std::vector<double>& spectrum() const { return spectrum_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

 private:
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
  ComplexMatrix eigenvectors_;
};

}  // namespace majq

#endif  // MAJQ_CORE_DENSITY_HPP_
