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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core/birkhoff.hpp"
#include "core/eig.hpp"
#include "core/error.hpp"
#include "core/majorization.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

using namespace majq;

namespace {

std::vector<double> random_simplex(std::size_t n, SplitMix64& rng) {
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = -std::log(rng.uniform_open());
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

// A pair u ≺ v built from first principles: u = B v for a random convex
// combination B of permutation matrices. Independent of hlp_witness.
std::pair<std::vector<double>, std::vector<double>> random_pair(
    std::size_t n, SplitMix64& rng) {
  const std::vector<double> v = random_simplex(n, rng);
  const std::size_t k = 1 + rng.below(n * n);
  std::vector<double> u(n, 0.0);
  const std::vector<double> w = random_simplex(k, rng);
  for (std::size_t t = 0; t < k; ++t) {
    const Permutation p = Permutation::random(n, rng);
    for (std::size_t j = 0; j < n; ++j) u[p(j)] += w[t] * v[j];
  }
  return {u, v};
}

// Reference check straight from the definition, written independently of
// majorizes_vec (plain sort + running sums, no shared helpers).
bool majorizes_reference(std::vector<double> u, std::vector<double> v) {
  std::sort(u.begin(), u.end(), std::greater<double>());
  std::sort(v.begin(), v.end(), std::greater<double>());
  double su = 0.0, sv = 0.0;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    su += u[k];
    sv += v[k];
    if (su > sv + 1e-9) return false;
  }
  su += u.back();
  sv += v.back();
  return std::fabs(su - sv) <= 1e-9 * std::max(1.0, std::fabs(sv));
}

RealMatrix from_rows(std::vector<std::vector<double>> rows) {
  const std::size_t r = rows.size(), c = rows[0].size();
  std::vector<double> data;
  for (const auto& row : rows) data.insert(data.end(), row.begin(), row.end());
  return RealMatrix(r, c, std::move(data));
}

double inf_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("majorizes_vec on fixed inputs") {
  CHECK(majorizes_vec({0.5, 0.5}, {1.0, 0.0}));
  CHECK_FALSE(majorizes_vec({1.0, 0.0}, {0.5, 0.5}));
  CHECK(majorizes_vec({0.5, 0.3, 0.2}, {0.6, 0.3, 0.1}));
  CHECK_FALSE(majorizes_vec({0.6, 0.3, 0.1}, {0.5, 0.3, 0.2}));
  // Reflexivity, any ordering of the entries.
  CHECK(majorizes_vec({0.2, 0.5, 0.3}, {0.3, 0.2, 0.5}));
  // Unequal totals fail even when prefixes dominate.
  CHECK_FALSE(majorizes_vec({0.5, 0.1}, {1.0, 0.0}));
  CHECK_THROWS_AS((void)majorizes_vec({1.0}, {0.5, 0.5}), Error);
}

TEST_CASE("majorizes_vec agrees with the definition on random input") {
  SplitMix64 rng(101);
  int trues = 0;
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = 2 + rng.below(5);
    std::vector<double> u(n), v(n);
    // Half the reps use genuine pairs, half use unrelated vectors.
    if (rep % 2 == 0) {
      auto [pu, pv] = random_pair(n, rng);
      u = pu;
      v = pv;
    } else {
      u = random_simplex(n, rng);
      v = random_simplex(n, rng);
    }
    const bool got = majorizes_vec(u, v);
    CHECK(got == majorizes_reference(u, v));
    trues += got ? 1 : 0;
  }
  CHECK(trues >= 1000);  // every constructed pair must pass
}

TEST_CASE("transitivity on sampled chains") {
  SplitMix64 rng(7);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rng.below(5);
    auto [v, w] = random_pair(n, rng);
    // Push v down again: u = B' v, giving u ≺ v ≺ w.
    const std::size_t k = 1 + rng.below(n);
    std::vector<double> u(n, 0.0);
    const std::vector<double> mix = random_simplex(k, rng);
    for (std::size_t t = 0; t < k; ++t) {
      const Permutation p = Permutation::random(n, rng);
      for (std::size_t j = 0; j < n; ++j) u[p(j)] += mix[t] * v[j];
    }
    REQUIRE(majorizes_vec(u, v));
    REQUIRE(majorizes_vec(v, w));
    CHECK(majorizes_vec(u, w));
  }
}

TEST_CASE("is_bistochastic") {
  CHECK(is_bistochastic(from_rows({{0.5, 0.5}, {0.5, 0.5}})));
  CHECK(is_bistochastic(from_rows({{0, 1}, {1, 0}})));
  CHECK(is_bistochastic(RealMatrix::identity(4)));
  CHECK_FALSE(is_bistochastic(from_rows({{1.1, -0.1}, {-0.1, 1.1}})));
  CHECK_FALSE(is_bistochastic(from_rows({{0.5, 0.5}, {0.6, 0.4}})));
  CHECK_FALSE(is_bistochastic(from_rows({{0.9, 0.0}, {0.0, 0.9}})));
  CHECK_THROWS_AS((void)is_bistochastic(RealMatrix(2, 3, std::vector<double>(6))),
                  Error);
}

TEST_CASE("hlp_witness on fixed inputs") {
  SUBCASE("u = v gives a permutation-grade witness") {
    const RealMatrix b = hlp_witness({0.3, 0.7}, {0.3, 0.7});
    CHECK(is_bistochastic(b));
    CHECK(inf_norm_diff(b.apply({0.3, 0.7}), {0.3, 0.7}) <= 1e-9);
  }
  SUBCASE("uniform from pure") {
    // The single T-transform at t = 1/2 is the flat 2×2 matrix.
    const RealMatrix b = hlp_witness({0.5, 0.5}, {1.0, 0.0});
    CHECK(b(0, 0) == doctest::Approx(0.5));
    CHECK(b(0, 1) == doctest::Approx(0.5));
    CHECK(b(1, 0) == doctest::Approx(0.5));
    CHECK(b(1, 1) == doctest::Approx(0.5));
  }
  SUBCASE("non-majorizing input is rejected") {
    CHECK_THROWS_AS((void)hlp_witness({1.0, 0.0}, {0.5, 0.5}), Error);
  }
}

TEST_CASE("hlp_witness soundness over random pairs") {
  SplitMix64 rng(13);
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rng.below(5);
    auto [u, v] = random_pair(n, rng);
    const RealMatrix b = hlp_witness(u, v);
    CHECK(is_bistochastic(b));
    CHECK(inf_norm_diff(b.apply(v), u) <= 1e-9);
  }
}

TEST_CASE("converse: bistochastic images are majorized") {
  SplitMix64 rng(19);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 2 + rng.below(5);
    auto [u, v] = random_pair(n, rng);  // u = B v by construction
    CHECK(majorizes_vec(u, v));
  }
}

TEST_CASE("birkhoff_decompose on fixed inputs") {
  SUBCASE("identity") {
    const auto d = birkhoff_decompose(RealMatrix::identity(3));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == doctest::Approx(1.0));
    for (std::size_t j = 0; j < 3; ++j) CHECK(d.terms[0].permutation(j) == j);
  }
  SUBCASE("flat 2x2 against brute force over S2") {
    const auto d = birkhoff_decompose(from_rows({{0.5, 0.5}, {0.5, 0.5}}));
    REQUIRE(d.terms.size() == 2);
    // S₂ has exactly the identity and the swap; each must carry weight 1/2.
    double id_weight = 0.0, swap_weight = 0.0;
    for (const auto& t : d.terms) {
      if (t.permutation(0) == 0 && t.permutation(1) == 1) id_weight = t.weight;
      if (t.permutation(0) == 1 && t.permutation(1) == 0) swap_weight = t.weight;
    }
    CHECK(id_weight == doctest::Approx(0.5));
    CHECK(swap_weight == doctest::Approx(0.5));
  }
  SUBCASE("3x3 circulant recovers the three cyclic shifts") {
    // Row i is (0.5, 0.3, 0.2) cycled; the only S₃ members inside the
    // support are the three cyclic shifts, so weights are forced.
    const auto b = from_rows(
        {{0.5, 0.3, 0.2}, {0.2, 0.5, 0.3}, {0.3, 0.2, 0.5}});
    const auto d = birkhoff_decompose(b);
    REQUIRE(d.terms.size() == 3);
    std::vector<double> by_shift(3, 0.0);
    for (const auto& t : d.terms) {
      const std::size_t shift = t.permutation(0);
      for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(t.permutation(j) == (j + shift) % 3);
      }
      by_shift[shift] += t.weight;
    }
    CHECK(by_shift[0] == doctest::Approx(0.5));
    CHECK(by_shift[1] == doctest::Approx(0.2));
    CHECK(by_shift[2] == doctest::Approx(0.3));
  }
  SUBCASE("non-bistochastic input is rejected") {
    CHECK_THROWS_AS(
        (void)birkhoff_decompose(from_rows({{0.9, 0.0}, {0.0, 0.9}})), Error);
  }
}

TEST_CASE("birkhoff_decompose reconstruction and term budget") {
  SplitMix64 rng(29);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      // Random convex combination of up to n² permutations.
      const std::size_t k = 1 + rng.below(n * n);
      const std::vector<double> w = random_simplex(k, rng);
      RealMatrix b(n, n, std::vector<double>(n * n, 0.0));
      for (std::size_t t = 0; t < k; ++t) {
        const Permutation p = Permutation::random(n, rng);
        for (std::size_t j = 0; j < n; ++j) b(p(j), j) += w[t];
      }
      REQUIRE(is_bistochastic(b));
      const auto d = birkhoff_decompose(b);
      CHECK(d.terms.size() <= (n - 1) * (n - 1) + 1);
      CHECK(max_abs_diff(d.reconstruct(), b) <= 1e-9);
      double total = 0.0;
      for (const auto& t : d.terms) {
        CHECK(t.weight > 0.0);
        total += t.weight;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("classify_vector_map on fixed inputs") {
  SUBCASE("identity is a scaled permutation") {
    const auto c = classify_vector_map(RealMatrix::identity(3));
    REQUIRE(c.tag == VectorMapClass::Tag::ScaledPermutation);
    CHECK(c.alpha == doctest::Approx(1.0));
    CHECK(c.beta == doctest::Approx(0.0));
    for (std::size_t j = 0; j < 3; ++j) CHECK(c.perm[j] == j);
  }
  SUBCASE("equal columns form the trace map") {
    const auto c = classify_vector_map(
        from_rows({{0.2, 0.2, 0.2}, {0.5, 0.5, 0.5}, {0.3, 0.3, 0.3}}));
    REQUIRE(c.tag == VectorMapClass::Tag::TraceForm);
    CHECK(c.a[0] == doctest::Approx(0.2));
    CHECK(c.a[1] == doctest::Approx(0.5));
    CHECK(c.a[2] == doctest::Approx(0.3));
  }
  SUBCASE("alpha P + beta E with a nontrivial permutation") {
    // α = 0.6 on the cycle (0→1→2→0), β = 0.25 everywhere.
    RealMatrix t(3, 3, std::vector<double>(9, 0.25));
    t(1, 0) += 0.6;
    t(2, 1) += 0.6;
    t(0, 2) += 0.6;
    const auto c = classify_vector_map(t);
    REQUIRE(c.tag == VectorMapClass::Tag::ScaledPermutation);
    CHECK(c.alpha == doctest::Approx(0.6));
    CHECK(c.beta == doctest::Approx(0.25));
    CHECK(c.perm[0] == 1);
    CHECK(c.perm[1] == 2);
    CHECK(c.perm[2] == 0);
  }
  SUBCASE("diag(1,1,2) is Other and genuinely fails preservation") {
    RealMatrix t(3, 3, std::vector<double>(9, 0.0));
    t(0, 0) = 1;
    t(1, 1) = 1;
    t(2, 2) = 2;
    const auto c = classify_vector_map(t);
    CHECK(c.tag == VectorMapClass::Tag::Other);

    // Counterexample search: some u ≺ v must map to Tu ⊀ Tv.
    SplitMix64 rng(43);
    bool found = false;
    for (int rep = 0; rep < 1000 && !found; ++rep) {
      auto [u, v] = random_pair(3, rng);
      if (!majorizes_vec(t.apply(u), t.apply(v))) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("classified forms preserve majorization") {
  SplitMix64 rng(47);
  for (int form = 0; form < 2; ++form) {
    for (int rep = 0; rep < 1000; ++rep) {
      const std::size_t n = 2 + rng.below(4);
      RealMatrix t(n, n, std::vector<double>(n * n, 0.0));
      if (form == 0) {
        // Trace form with a random a.
        const auto a = random_simplex(n, rng);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) t(i, j) = a[i];
        REQUIRE(classify_vector_map(t).tag == VectorMapClass::Tag::TraceForm);
      } else {
        const double alpha = rng.uniform() * 2.0 - 0.5;
        const double beta = rng.uniform();
        const Permutation p = Permutation::random(n, rng);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) t(i, j) = beta;
        for (std::size_t j = 0; j < n; ++j) t(p(j), j) += alpha;
        REQUIRE(classify_vector_map(t).tag ==
                VectorMapClass::Tag::ScaledPermutation);
      }
      auto [u, v] = random_pair(n, rng);
      CHECK(majorizes_vec(t.apply(u), t.apply(v), 1e-8));
    }
  }
}

TEST_CASE("majorizes_op reduces to spectra") {
  SUBCASE("fixed diagonal cases") {
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 0.6;
    a(1, 1) = 0.4;
    b(0, 0) = 0.9;
    b(1, 1) = 0.1;
    CHECK(majorizes_op(HermitianMatrix(a), HermitianMatrix(b)));
    CHECK_FALSE(majorizes_op(HermitianMatrix(b), HermitianMatrix(a)));
  }
  SUBCASE("uniform spectrum is minimal") {
    SplitMix64 rng(53);
    for (int rep = 0; rep < 50; ++rep) {
      const auto sigma = sample_density(3, rng);
      ComplexMatrix eye_over_n(3, 3);
      for (std::size_t i = 0; i < 3; ++i) eye_over_n(i, i) = 1.0 / 3.0;
      CHECK(majorizes_op(HermitianMatrix(eye_over_n),
                         HermitianMatrix(sigma.rho.matrix())));
    }
  }
  SUBCASE("unitary conjugation majorizes both ways") {
    SplitMix64 rng(59);
    const auto sigma = sample_density(4, rng);
    const ComplexMatrix u = haar_unitary(4, rng);
    const ComplexMatrix rotated = u * sigma.rho.matrix() * u.adjoint();
    CHECK(majorizes_op(HermitianMatrix(rotated),
                       HermitianMatrix(sigma.rho.matrix())));
    CHECK(majorizes_op(HermitianMatrix(sigma.rho.matrix()),
                       HermitianMatrix(rotated)));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS((void)majorizes_op(
                        HermitianMatrix(ComplexMatrix::identity(2)),
                        HermitianMatrix(ComplexMatrix::identity(3))),
                    Error);
  }
}

TEST_CASE("mixed_unitary_witness reconstructs the lower matrix") {
  SUBCASE("fixed qubit example") {
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 0.5;
    a(1, 1) = 0.5;
    b(0, 0) = 1.0;
    const auto w = mixed_unitary_witness(HermitianMatrix(a), HermitianMatrix(b));
    CHECK(max_abs_diff(w.apply_to(b), a) <= 1e-8);
    double total = 0.0;
    for (const auto& t : w.terms) total += t.weight;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("not majorized errors out") {
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0;
    b(0, 0) = 0.5;
    b(1, 1) = 0.5;
    CHECK_THROWS_AS(
        (void)mixed_unitary_witness(HermitianMatrix(a), HermitianMatrix(b)),
        Error);
  }
  SUBCASE("random pairs, including degenerate spectra") {
    SplitMix64 rng(61);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t n = 2 + rng.below(3);
      // Operator pair via a random bistochastic push of the spectrum.
      const auto sigma = sample_density(n, rng);
      auto [a_spec, _] = random_pair(n, rng);
      (void)_;
      // Reuse the spectrum machinery: rho = V diag(D λ(σ)) V†.
      std::vector<double> pushed(n, 0.0);
      const std::size_t k = 1 + rng.below(n);
      const auto mix = random_simplex(k, rng);
      for (std::size_t t = 0; t < k; ++t) {
        const Permutation p = Permutation::random(n, rng);
        for (std::size_t j = 0; j < n; ++j) {
          pushed[p(j)] += mix[t] * sigma.spectrum[j];
        }
      }
      const ComplexMatrix v = haar_unitary(n, rng);
      ComplexMatrix diag(n, n);
      for (std::size_t i = 0; i < n; ++i) diag(i, i) = pushed[i];
      const ComplexMatrix a = v * diag * v.adjoint();

      const HermitianMatrix ha(a), hb(sigma.rho.matrix());
      REQUIRE(majorizes_op(ha, hb));
      const auto w = mixed_unitary_witness(ha, hb);
      CHECK(max_abs_diff(w.apply_to(sigma.rho.matrix()), a) <= 1e-8);
      for (const auto& t : w.terms) {
        CHECK(max_abs_diff(t.unitary.adjoint() * t.unitary,
                           ComplexMatrix::identity(n)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("prop 2.3 consistency between predicate and witness") {
  SplitMix64 rng(67);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rng.below(3);
    const auto a = sample_density(n, rng);
    const auto b = sample_density(n, rng);
    const HermitianMatrix ha(a.rho.matrix()), hb(b.rho.matrix());
    if (majorizes_op(ha, hb)) {
      CHECK_NOTHROW((void)mixed_unitary_witness(ha, hb));
    } else {
      CHECK_THROWS_AS((void)mixed_unitary_witness(ha, hb), Error);
    }
  }
}
