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

#include "core/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace majq {

DensityMatrix::DensityMatrix(const ComplexMatrix& m)
    : matrix_(m), eigenvectors_(0, 0) {
  HermitianMatrix h(m, kTol.hermiticity);
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTol.density_trace) {
    throw Error(ErrorCode::InvalidArgument,
                "density matrix trace is " + std::to_string(tr));
  }
  auto eig = hermitian_eig(h);
  if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -kTol.density_psd) {
    throw Error(ErrorCode::BadSpectrum,
                "density matrix has eigenvalue " +
                    std::to_string(eig.eigenvalues.back()));
  }
  for (double& w : eig.eigenvalues) w = std::clamp(w, 0.0, 1.0);
  spectrum_ = std::move(eig.eigenvalues);
  eigenvectors_ = std::move(eig.eigenvectors);
}

}  // namespace majq
