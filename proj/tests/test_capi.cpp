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

// Exercises the shared library strictly through majq/majq.h: no internal
// headers, everything crosses the C boundary as handles and JSON strings.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include <majq/majq.h>

using nlohmann::json;

namespace {

// Scope guards so a failing CHECK cannot leak API objects.
struct String {
  char* s = nullptr;
  ~String() { majq_string_free(s); }
  json parsed() const { return json::parse(s); }
};

struct Matrix {
  majq_matrix* m = nullptr;
  ~Matrix() { majq_matrix_free(m); }
};

struct Channel {
  majq_channel* c = nullptr;
  ~Channel() { majq_channel_free(c); }
};

std::vector<std::vector<std::complex<double>>> entries(const json& doc) {
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& row : doc) {
    out.emplace_back();
    for (const auto& e : row) {
      out.back().emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("version, status names, free(NULL)") {
  CHECK(std::string(majq_version()) == "0.1.0");
  CHECK(std::string(majq_status_name(MAJQ_OK)) == "OK");
  CHECK(std::string(majq_status_name(MAJQ_ERR_NOT_MAJORIZED)) == "NotMajorized");
  CHECK(std::string(majq_status_name(MAJQ_ERR_LAMBDA_OUT_OF_RANGE)) ==
        "LambdaOutOfRange");

  majq_string_free(nullptr);
  majq_matrix_free(nullptr);
  majq_channel_free(nullptr);
}

TEST_CASE("null arguments are rejected, not crashed on") {
  CHECK(majq_matrix_parse(nullptr, nullptr) == MAJQ_ERR_INVALID_ARGUMENT);
  int r = 0;
  CHECK(majq_majorizes_vec(nullptr, "[1]", 0, &r) == MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(majq_majorizes_vec("[1]", "[1]", 0, nullptr) ==
        MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(majq_channel_parse("{}", nullptr) == MAJQ_ERR_INVALID_ARGUMENT);
  double lo, hi;
  CHECK(majq_lambda_range(MAJQ_FAMILY_UNITARY, 3, nullptr, &hi) ==
        MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(majq_lambda_range(MAJQ_FAMILY_UNITARY, 3, &lo, nullptr) ==
        MAJQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parse failures set majq_last_error") {
  Matrix m;
  CHECK(majq_matrix_parse("not json", &m.m) == MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(majq_last_error()) > 0);
  CHECK(m.m == nullptr);

  CHECK(majq_matrix_parse("[[1,2],[3]]", &m.m) == MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(majq_last_error()) > 0);

  // A successful call clears the message.
  Matrix ok;
  REQUIRE(majq_matrix_parse("[[1]]", &ok.m) == MAJQ_OK);
  CHECK(std::strlen(majq_last_error()) == 0);
}

TEST_CASE("matrix handles: create, inspect, serialize") {
  const double data[] = {1.0, 0.0, 0.0, -2.0,   // row 0: 1, -2i
                         0.0, 2.0, 3.0, 0.0};   // row 1: 2i, 3
  Matrix m;
  REQUIRE(majq_matrix_create(2, 2, data, &m.m) == MAJQ_OK);
  size_t rows = 0, cols = 0;
  CHECK(majq_matrix_rows(m.m, &rows) == MAJQ_OK);
  CHECK(majq_matrix_cols(m.m, &cols) == MAJQ_OK);
  CHECK(rows == 2);
  CHECK(cols == 2);

  String s;
  REQUIRE(majq_matrix_to_json(m.m, &s.s) == MAJQ_OK);
  const auto e = entries(s.parsed());
  CHECK(e[0][1] == std::complex<double>(0.0, -2.0));
  CHECK(e[1][0] == std::complex<double>(0.0, 2.0));

  Matrix back;
  REQUIRE(majq_matrix_parse(s.s, &back.m) == MAJQ_OK);
  String s2;
  REQUIRE(majq_matrix_to_json(back.m, &s2.s) == MAJQ_OK);
  CHECK(std::string(s.s) == s2.s);

  CHECK(majq_matrix_create(2, 2, nullptr, &m.m) == MAJQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hermitian eigenvalues come out descending") {
  const double data[] = {2.0, 0.0, 0.0, 1.0,    // [[2, i], [-i, 2]]
                         0.0, -1.0, 2.0, 0.0};
  Matrix m;
  REQUIRE(majq_matrix_create(2, 2, data, &m.m) == MAJQ_OK);
  double eig[2] = {0, 0};
  REQUIRE(majq_hermitian_eigenvalues(m.m, eig) == MAJQ_OK);
  CHECK(std::fabs(eig[0] - 3.0) <= 1e-12);
  CHECK(std::fabs(eig[1] - 1.0) <= 1e-12);

  const double skew[] = {0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  Matrix bad;
  REQUIRE(majq_matrix_create(2, 2, skew, &bad.m) == MAJQ_OK);
  CHECK(majq_hermitian_eigenvalues(bad.m, eig) == MAJQ_ERR_NON_HERMITIAN);
}

TEST_CASE("random matrix constructors are seed-deterministic") {
  Matrix u1, u2;
  REQUIRE(majq_random_haar_unitary(3, 42, &u1.m) == MAJQ_OK);
  REQUIRE(majq_random_haar_unitary(3, 42, &u2.m) == MAJQ_OK);
  String j1, j2;
  REQUIRE(majq_matrix_to_json(u1.m, &j1.s) == MAJQ_OK);
  REQUIRE(majq_matrix_to_json(u2.m, &j2.s) == MAJQ_OK);
  CHECK(std::string(j1.s) == j2.s);

  // U U† = 1, checked by hand on the JSON entries.
  const auto e = entries(j1.parsed());
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      std::complex<double> dot = 0.0;
      for (size_t k = 0; k < 3; ++k) dot += e[i][k] * std::conj(e[j][k]);
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }

  const double spec[] = {0.5, 0.3, 0.2};
  Matrix rho;
  REQUIRE(majq_random_density(3, spec, 3, 7, &rho.m) == MAJQ_OK);
  double eig[3];
  REQUIRE(majq_hermitian_eigenvalues(rho.m, eig) == MAJQ_OK);
  CHECK(std::fabs(eig[0] - 0.5) <= 1e-9);
  CHECK(std::fabs(eig[1] - 0.3) <= 1e-9);
  CHECK(std::fabs(eig[2] - 0.2) <= 1e-9);

  Matrix any;
  REQUIRE(majq_random_density(4, nullptr, 0, 7, &any.m) == MAJQ_OK);
  double e4[4];
  REQUIRE(majq_hermitian_eigenvalues(any.m, e4) == MAJQ_OK);
  CHECK(std::fabs(e4[0] + e4[1] + e4[2] + e4[3] - 1.0) <= 1e-9);

  const double bad_spec[] = {0.9, 0.2};
  CHECK(majq_random_density(2, bad_spec, 2, 1, &any.m) ==
        MAJQ_ERR_BAD_SPECTRUM);
}

TEST_CASE("vector majorization through JSON strings") {
  int r = -1;
  REQUIRE(majq_majorizes_vec("[0.5,0.5]", "[1,0]", 0, &r) == MAJQ_OK);
  CHECK(r == 1);
  REQUIRE(majq_majorizes_vec("[1,0]", "[0.5,0.5]", 0, &r) == MAJQ_OK);
  CHECK(r == 0);  // false is a result, not an error
  CHECK(majq_majorizes_vec("[1,0]", "[1,0,0]", 0, &r) ==
        MAJQ_ERR_LENGTH_MISMATCH);

  // An explicit loose tolerance flips a barely-unequal-total pair.
  REQUIRE(majq_majorizes_vec("[0.5,0.5]", "[1.0,0.0000001]", 0, &r) == MAJQ_OK);
  CHECK(r == 0);
  REQUIRE(majq_majorizes_vec("[0.5,0.5]", "[1.0,0.0000001]", 1e-3, &r) ==
          MAJQ_OK);
  CHECK(r == 1);
}

TEST_CASE("hlp witness maps v to u") {
  String w;
  REQUIRE(majq_hlp_witness("[0.4,0.35,0.25]", "[0.6,0.3,0.1]", &w.s) == MAJQ_OK);
  const json b = w.parsed();
  const double v[] = {0.6, 0.3, 0.1};
  const double u[] = {0.4, 0.35, 0.25};
  for (size_t i = 0; i < 3; ++i) {
    double acc = 0.0, row_sum = 0.0;
    for (size_t j = 0; j < 3; ++j) {
      const double entry = b.at(i).at(j).get<double>();
      CHECK(entry >= -1e-12);
      acc += entry * v[j];
      row_sum += entry;
    }
    CHECK(std::fabs(acc - u[i]) <= 1e-9);
    CHECK(std::fabs(row_sum - 1.0) <= 1e-9);
  }

  char* out = nullptr;
  CHECK(majq_hlp_witness("[1,0]", "[0.5,0.5]", &out) == MAJQ_ERR_NOT_MAJORIZED);
  CHECK(out == nullptr);
}

TEST_CASE("bistochastic predicates and Birkhoff terms") {
  int r = 0;
  REQUIRE(majq_is_bistochastic("[[0.5,0.5],[0.5,0.5]]", 0, &r) == MAJQ_OK);
  CHECK(r == 1);
  REQUIRE(majq_is_bistochastic("[[0.9,0.5],[0.1,0.5]]", 0, &r) == MAJQ_OK);
  CHECK(r == 0);

  String d;
  REQUIRE(majq_birkhoff("[[0.5,0.5],[0.5,0.5]]", 0, &d.s) == MAJQ_OK);
  const json terms = d.parsed().at("terms");
  REQUIRE(terms.size() == 2);
  CHECK(terms.at(0).at("weight").get<double>() == doctest::Approx(0.5));
  char* out = nullptr;
  CHECK(majq_birkhoff("[[1,1],[0,0]]", 0, &out) == MAJQ_ERR_NOT_BISTOCHASTIC);
}

TEST_CASE("vector map classification over the C boundary") {
  String c;
  REQUIRE(majq_classify_vector_map("[[0.3,0.3],[0.7,0.7]]", 0, &c.s) == MAJQ_OK);
  CHECK(c.parsed().at("tag") == "trace-form");

  String o;
  REQUIRE(majq_classify_vector_map("[[1,0],[0,2]]", 0, &o.s) == MAJQ_OK);
  CHECK(o.parsed().at("tag") == "other");
}

TEST_CASE("operator majorization on matrix handles") {
  const double a_data[] = {0.5, 0, 0, 0, 0, 0, 0.5, 0};
  const double b_data[] = {1.0, 0, 0, 0, 0, 0, 0.0, 0};
  Matrix a, b;
  REQUIRE(majq_matrix_create(2, 2, a_data, &a.m) == MAJQ_OK);
  REQUIRE(majq_matrix_create(2, 2, b_data, &b.m) == MAJQ_OK);

  int r = 0;
  REQUIRE(majq_majorizes_op(a.m, b.m, 0, &r) == MAJQ_OK);
  CHECK(r == 1);
  REQUIRE(majq_majorizes_op(b.m, a.m, 0, &r) == MAJQ_OK);
  CHECK(r == 0);

  String w;
  REQUIRE(majq_mixed_unitary_witness(a.m, b.m, &w.s) == MAJQ_OK);
  const json terms = w.parsed().at("terms");
  double total = 0.0;
  for (const auto& t : terms) total += t.at("weight").get<double>();
  CHECK(std::fabs(total - 1.0) <= 1e-9);

  char* out = nullptr;
  CHECK(majq_mixed_unitary_witness(b.m, a.m, &out) == MAJQ_ERR_NOT_MAJORIZED);
}

TEST_CASE("channel construction, serialization, action") {
  Matrix u;
  REQUIRE(majq_random_haar_unitary(3, 99, &u.m) == MAJQ_OK);

  Channel phi;
  REQUIRE(majq_make_dep_unitary(0.55, u.m, &phi.c) == MAJQ_OK);
  size_t dim = 0;
  CHECK(majq_channel_dim(phi.c, &dim) == MAJQ_OK);
  CHECK(dim == 3);

  String cj;
  REQUIRE(majq_channel_to_json(phi.c, &cj.s) == MAJQ_OK);
  Channel back;
  REQUIRE(majq_channel_parse(cj.s, &back.c) == MAJQ_OK);
  String cj2;
  REQUIRE(majq_channel_to_json(back.c, &cj2.s) == MAJQ_OK);
  CHECK(std::string(cj.s) == cj2.s);

  // Φ applied to the maximally mixed state is the maximally mixed state.
  const double third = 1.0 / 3.0;
  const double flat[] = {third, 0, 0, 0, 0, 0,
                         0, 0, third, 0, 0, 0,
                         0, 0, 0, 0, third, 0};
  Matrix rho, out;
  REQUIRE(majq_matrix_create(3, 3, flat, &rho.m) == MAJQ_OK);
  REQUIRE(majq_channel_apply(phi.c, rho.m, &out.m) == MAJQ_OK);
  String oj;
  REQUIRE(majq_matrix_to_json(out.m, &oj.s) == MAJQ_OK);
  const auto e = entries(oj.parsed());
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      CHECK(std::abs(e[i][j] - (i == j ? third : 0.0)) <= 1e-9);
    }
  }

  CHECK(majq_make_dep_unitary(1.5, u.m, &phi.c) ==
        MAJQ_ERR_LAMBDA_OUT_OF_RANGE);

  const double not_unitary[] = {2, 0, 0, 0, 0, 0, 1, 0};
  Matrix g;
  REQUIRE(majq_matrix_create(2, 2, not_unitary, &g.m) == MAJQ_OK);
  CHECK(majq_make_dep_unitary(0.5, g.m, &phi.c) == MAJQ_ERR_NOT_UNITARY);
}

TEST_CASE("lambda_range endpoints") {
  double lo = 0, hi = 0;
  REQUIRE(majq_lambda_range(MAJQ_FAMILY_UNITARY, 3, &lo, &hi) == MAJQ_OK);
  CHECK(lo == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(majq_lambda_range(MAJQ_FAMILY_TRANSPOSE, 3, &lo, &hi) == MAJQ_OK);
  CHECK(lo == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(hi == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(majq_lambda_range(MAJQ_FAMILY_UNITARY, 1, &lo, &hi) ==
        MAJQ_ERR_BAD_DIMENSION);
}

TEST_CASE("choi documents and CP checks") {
  Matrix u;
  REQUIRE(majq_random_haar_unitary(2, 5, &u.m) == MAJQ_OK);
  Channel phi;
  REQUIRE(majq_make_dep_transpose(0.2, u.m, &phi.c) == MAJQ_OK);

  String choi;
  REQUIRE(majq_channel_choi(phi.c, &choi.s) == MAJQ_OK);
  CHECK(choi.parsed().at("dim") == 2);

  int cp = 0;
  double min_eig = -1;
  REQUIRE(majq_choi_is_cp(choi.s, 0, &cp, &min_eig) == MAJQ_OK);
  CHECK(cp == 1);
  CHECK(min_eig >= -1e-12);
  REQUIRE(majq_choi_is_cp(choi.s, 0, &cp, nullptr) == MAJQ_OK);  // optional out

  Channel back;
  REQUIRE(majq_kraus_from_choi(choi.s, 0, &back.c) == MAJQ_OK);
  String choi2;
  REQUIRE(majq_channel_choi(back.c, &choi2.s) == MAJQ_OK);
  // Same Choi matrix up to numerical noise.
  const auto a = entries(choi.parsed().at("choi"));
  const auto b = entries(choi2.parsed().at("choi"));
  for (size_t i = 0; i < 4; ++i) {
    for (size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(a[i][j] - b[i][j]) <= 1e-8);
    }
  }

  // The SWAP corner of the transpose family is not CP.
  const std::string swap_choi =
      R"({"dim":2,"choi":[[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]})";
  REQUIRE(majq_choi_is_cp(swap_choi.c_str(), 0, &cp, &min_eig) == MAJQ_OK);
  CHECK(cp == 0);
  CHECK(min_eig == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(majq_kraus_from_choi(swap_choi.c_str(), 0, &back.c) == MAJQ_ERR_NOT_CP);
}

TEST_CASE("classification round trip over the C boundary") {
  Matrix u;
  REQUIRE(majq_random_haar_unitary(4, 11, &u.m) == MAJQ_OK);
  Channel phi;
  REQUIRE(majq_make_dep_unitary(0.3, u.m, &phi.c) == MAJQ_OK);

  String c;
  REQUIRE(majq_classify_channel(phi.c, 0, &c.s) == MAJQ_OK);
  const json doc = c.parsed();
  CHECK(doc.at("tag") == "dep-unitary");
  CHECK(doc.at("lambda").get<double>() == doctest::Approx(0.3).epsilon(1e-7));

  const double omega_data[] = {0.5, 0, 0, 0, 0, 0, 0.5, 0};
  Matrix omega;
  REQUIRE(majq_matrix_create(2, 2, omega_data, &omega.m) == MAJQ_OK);
  Channel cst;
  REQUIRE(majq_make_constant(omega.m, &cst.c) == MAJQ_OK);
  String cc;
  REQUIRE(majq_classify_channel(cst.c, 0, &cc.s) == MAJQ_OK);
  CHECK(cc.parsed().at("tag") == "constant");
}

TEST_CASE("entropy over the C boundary") {
  const double data[] = {0.75, 0, 0, 0, 0, 0, 0.25, 0};
  Matrix rho;
  REQUIRE(majq_matrix_create(2, 2, data, &rho.m) == MAJQ_OK);
  double bits = 0;
  REQUIRE(majq_von_neumann_entropy(rho.m, &bits) == MAJQ_OK);
  CHECK(std::fabs(bits - 0.8112781244591328) <= 1e-12);

  const double not_state[] = {2, 0, 0, 0, 0, 0, 1, 0};
  Matrix bad;
  REQUIRE(majq_matrix_create(2, 2, not_state, &bad.m) == MAJQ_OK);
  CHECK(majq_von_neumann_entropy(bad.m, &bits) == MAJQ_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(majq_last_error()) > 0);
}

TEST_CASE("property engine reports over the C boundary") {
  Matrix u;
  REQUIRE(majq_random_haar_unitary(2, 21, &u.m) == MAJQ_OK);
  Channel phi;
  REQUIRE(majq_make_dep_unitary(0.5, u.m, &phi.c) == MAJQ_OK);

  String pres;
  REQUIRE(majq_test_preservation(phi.c, 100, 4, &pres.s) == MAJQ_OK);
  json doc = pres.parsed();
  CHECK(doc.at("trials") == 100);
  CHECK(doc.at("failures") == 0);
  CHECK(doc.at("seed") == 4);
  CHECK(doc.at("counterexample").is_null());

  String li1, li2;
  REQUIRE(majq_test_li(3, 200, 8, &li1.s) == MAJQ_OK);
  REQUIRE(majq_test_li(3, 200, 8, &li2.s) == MAJQ_OK);
  CHECK(li1.parsed().at("failures") == 0);
  json a = li1.parsed(), b = li2.parsed();
  a.erase("elapsed_s");
  b.erase("elapsed_s");
  CHECK(a == b);  // same seed, same semantic report

  const double rho0_data[] = {0.7, 0, 0, 0, 0, 0, 0.3, 0};
  Matrix rho0;
  REQUIRE(majq_matrix_create(2, 2, rho0_data, &rho0.m) == MAJQ_OK);
  String orbit;
  REQUIRE(majq_test_orbit(phi.c, rho0.m, 100, 4, &orbit.s) == MAJQ_OK);
  CHECK(orbit.parsed().at("failures") == 0);

  const double flat_data[] = {0.5, 0, 0, 0, 0, 0, 0.5, 0};
  Matrix flat;
  REQUIRE(majq_matrix_create(2, 2, flat_data, &flat.m) == MAJQ_OK);
  char* out = nullptr;
  CHECK(majq_test_orbit(phi.c, flat.m, 10, 1, &out) ==
        MAJQ_ERR_SPECTRUM_DEGENERATE);
}

TEST_CASE("unital sampling and the explorer over the C boundary") {
  Channel phi;
  REQUIRE(majq_random_unital_channel(3, 2, 17, &phi.c) == MAJQ_OK);
  size_t dim = 0;
  CHECK(majq_channel_dim(phi.c, &dim) == MAJQ_OK);
  CHECK(dim == 3);

  Channel again;
  REQUIRE(majq_random_unital_channel(3, 2, 17, &again.c) == MAJQ_OK);
  String j1, j2;
  REQUIRE(majq_channel_to_json(phi.c, &j1.s) == MAJQ_OK);
  REQUIRE(majq_channel_to_json(again.c, &j2.s) == MAJQ_OK);
  CHECK(std::string(j1.s) == j2.s);

  String ex;
  REQUIRE(majq_explore_conjecture(3, 6, 60, 31, &ex.s) == MAJQ_OK);
  const json doc = ex.parsed();
  CHECK(doc.at("dim") == 3);
  REQUIRE(doc.at("rows").size() == 6);
  for (const auto& row : doc.at("rows")) {
    CHECK(row.contains("construction"));
    CHECK(row.contains("preserved"));
    CHECK(row.contains("class"));
  }
  char* out = nullptr;
  CHECK(majq_explore_conjecture(2, 3, 10, 1, &out) == MAJQ_ERR_BAD_DIMENSION);
}
