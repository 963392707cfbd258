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

#include "core/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "core/eig.hpp"

namespace majq {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Kuhn's augmenting-path matching on the bipartite support graph.
// adj[r] lists columns with residual entry > tol; match_col[c] = row or kNone.
bool augment(std::size_t r, const std::vector<std::vector<std::size_t>>& adj,
             std::vector<std::size_t>& match_col, std::vector<bool>& visited) {
  for (std::size_t c : adj[r]) {
    if (visited[c]) continue;
    visited[c] = true;
    if (match_col[c] == kNone ||
        augment(match_col[c], adj, match_col, visited)) {
      match_col[c] = r;
      return true;
    }
  }
  return false;
}

// Perfect matching using only entries ≥ threshold; empty vector on failure.
std::vector<std::size_t> matching_at(const RealMatrix& residual,
                                     double threshold) {
  const std::size_t n = residual.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (residual(i, j) >= threshold) adj[i].push_back(j);
    }
  std::vector<std::size_t> match_col(n, kNone);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> visited(n, false);
    if (!augment(r, adj, match_col, visited)) return {};
  }
  return match_col;
}

// Carathéodory reduction: while more than (n−1)²+1 terms remain, the lifted
// columns (vec(P_k), 1) are linearly dependent; shifting the weights along a
// kernel vector zeroes at least one of them without moving Σ w_k P_k or Σ w_k.
void reduce_terms(std::vector<BirkhoffTerm>& terms, std::size_t n) {
  const std::size_t cap = (n - 1) * (n - 1) + 1;
  while (terms.size() > cap) {
    const std::size_t m = terms.size();
    const std::size_t rows = n * n + 1;
    std::vector<std::vector<double>> a(rows, std::vector<double>(m, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) a[terms[k].permutation(j) * n + j][k] = 1.0;
      a[rows - 1][k] = 1.0;
    }

    // Gaussian elimination with partial pivoting; free columns span the kernel.
    std::vector<std::size_t> pivot_of_col(m, kNone);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < rows; ++col) {
      std::size_t best = rank;
      for (std::size_t r = rank + 1; r < rows; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
      }
      if (std::abs(a[best][col]) < 1e-12) continue;
      std::swap(a[rank], a[best]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][col] == 0.0) continue;
        const double f = a[r][col] / a[rank][col];
        for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[rank][c];
      }
      pivot_of_col[col] = rank;
      ++rank;
    }

    std::size_t free_col = kNone;
    for (std::size_t col = 0; col < m; ++col) {
      if (pivot_of_col[col] == kNone) {
        free_col = col;
        break;
      }
    }
    if (free_col == kNone) return;  // numerically full rank; keep the terms

    std::vector<double> c(m, 0.0);
    c[free_col] = 1.0;
    for (std::size_t col = 0; col < m; ++col) {
      if (col == free_col || pivot_of_col[col] == kNone) continue;
      const std::size_t r = pivot_of_col[col];
      c[col] = -a[r][free_col] / a[r][col];
    }

    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) {
      if (c[k] > 1e-15) theta = std::min(theta, terms[k].weight / c[k]);
    }
    if (!std::isfinite(theta)) {
      for (double& x : c) x = -x;
      theta = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k] > 1e-15) theta = std::min(theta, terms[k].weight / c[k]);
      }
    }
    if (!std::isfinite(theta)) return;

    std::vector<BirkhoffTerm> kept;
    kept.reserve(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      const double w = terms[k].weight - theta * c[k];
      if (w > 1e-14) {
        kept.push_back(BirkhoffTerm{w, terms[k].permutation});
      }
    }
    if (kept.size() >= terms.size()) return;  // no progress; bail out safely
    terms = std::move(kept);
  }
}

}  // namespace

RealMatrix BirkhoffDecomposition::reconstruct() const {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidState, "empty decomposition");
  }
  const std::size_t n = terms.front().permutation.size();
  RealMatrix sum(n, n);
  for (const auto& term : terms) {
    for (std::size_t j = 0; j < n; ++j) sum(term.permutation(j), j) += term.weight;
  }
  return sum;
}

BirkhoffDecomposition birkhoff_decompose(const RealMatrix& b, double tol) {
  if (tol <= 0.0 || tol >= 0.1) {
    throw Error(ErrorCode::InvalidArgument, "tolerance out of range");
  }
  if (!is_bistochastic(b, tol)) {
    throw Error(ErrorCode::NotBistochastic, "input is not bistochastic");
  }
  const std::size_t n = b.rows();
  RealMatrix residual = b;

  const auto mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += std::max(residual(i, j), 0.0);
    return s;
  };

  BirkhoffDecomposition out;
  while (mass() > double(n) * tol) {
    std::vector<double> levels;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (residual(i, j) > tol) levels.push_back(residual(i, j));
      }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // Bottleneck extraction: the largest threshold whose support still has a
    // perfect matching. Feasibility is monotone in the threshold, so binary
    // search over the distinct residual values applies. Taking the heaviest
    // matching first keeps the term list short and deterministic.
    std::vector<std::size_t> match_col = matching_at(residual, levels.front());
    if (match_col.empty()) {
      throw Error(ErrorCode::NoPerfectMatching,
                  "support graph has no perfect matching at this tolerance");
    }
    std::size_t lo = 0, hi = levels.size();
    while (lo + 1 < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto candidate = matching_at(residual, levels[mid]);
      if (candidate.empty()) {
        hi = mid;
      } else {
        lo = mid;
        match_col = std::move(candidate);
      }
    }

    // match_col[c] = r selects entry (r, c); permutation image[c] = r.
    std::vector<std::size_t> image(n);
    double w = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      image[c] = match_col[c];
      w = std::min(w, residual(match_col[c], c));
    }
    for (std::size_t c = 0; c < n; ++c) residual(match_col[c], c) -= w;
    out.terms.push_back(BirkhoffTerm{w, Permutation(std::move(image))});
  }
  reduce_terms(out.terms, n);
  return out;
}

ComplexMatrix MixedUnitaryWitness::apply_to(const ComplexMatrix& b) const {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidState, "empty witness");
  }
  ComplexMatrix sum(b.rows(), b.cols());
  for (const auto& term : terms) {
    sum += Complex(term.weight) * (term.unitary * b * term.unitary.adjoint());
  }
  return sum;
}

MixedUnitaryWitness mixed_unitary_witness(const HermitianMatrix& a,
                                          const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operators differ in dimension");
  }
  const auto ea = hermitian_eig(a);
  const auto eb = hermitian_eig(b);
  if (!majorizes_vec(ea.eigenvalues, eb.eigenvalues)) {
    throw Error(ErrorCode::NotMajorized, "A is not majorized by B");
  }
  const auto d = birkhoff_decompose(hlp_witness(ea.eigenvalues, eb.eigenvalues));

  MixedUnitaryWitness out;
  out.terms.reserve(d.terms.size());
  const ComplexMatrix w_adj = eb.eigenvectors.adjoint();
  for (const auto& term : d.terms) {
    out.terms.push_back(MixedUnitaryTerm{
        term.weight, ea.eigenvectors * term.permutation.complex_matrix() * w_adj});
  }
  return out;
}

}  // namespace majq
