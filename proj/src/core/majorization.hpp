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

#ifndef MAJQ_CORE_MAJORIZATION_HPP_
#define MAJQ_CORE_MAJORIZATION_HPP_

#include <cstddef>
#include <vector>

#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/tolerances.hpp"

namespace majq {

// Dense real matrix, row-major. Used for bistochastic matrices and the
// vector maps of the Ando classification.
class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const double& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }

  // M v
  std::vector<double> apply(const std::vector<double>& v) const;

  ComplexMatrix to_complex() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

// π as image[j] = π(j); the matrix has (P_π)_ij = 1 iff i = π(j), so
// (P_π v)_{π(j)} = v_j.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, SplitMix64& rng);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  RealMatrix matrix() const;
  ComplexMatrix complex_matrix() const;
  std::vector<double> apply(const std::vector<double>& v) const;

 private:
  std::vector<std::size_t> image_;
};

std::vector<double> decreasing_rearrangement(std::vector<double> v);

// u ≺ v: every prefix sum of u↓ is ≤ the matching prefix sum of v↓ plus tol,
// totals agree within tol × max(1, |Σv|).
bool majorizes_vec(const std::vector<double>& u, const std::vector<double>& v,
                   double tol = kTol.majorization);

bool is_bistochastic(const RealMatrix& b, double tol = kTol.bistochastic);

// Constructive half of the majorization ⇔ bistochastic-image equivalence:
// given u ≺ v, returns bistochastic B with Bv = u, built from at most n−1
// T-transforms on sorted coordinates and conjugated by sorting permutations.
RealMatrix hlp_witness(const std::vector<double>& u, const std::vector<double>& v);

// Classification of linear maps on ℝⁿ that preserve majorization:
// either every column equals a (Tu = Tr(u)·a) or T = αP + βE with P a
// permutation and E all-ones. Anything else is Other.
struct VectorMapClass {
  enum class Tag { TraceForm, ScaledPermutation, Other };

  Tag tag = Tag::Other;
  std::vector<double> a;          // TraceForm
  double alpha = 0.0;             // ScaledPermutation
  double beta = 0.0;
  std::vector<std::size_t> perm;  // image form, empty unless ScaledPermutation
};

VectorMapClass classify_vector_map(const RealMatrix& t, double tol = 1e-9);

// A ≺ B for Hermitian operators: λ(A) ≺ λ(B).
bool majorizes_op(const HermitianMatrix& a, const HermitianMatrix& b,
                  double tol = kTol.majorization);

}  // namespace majq

#endif  // MAJQ_CORE_MAJORIZATION_HPP_
