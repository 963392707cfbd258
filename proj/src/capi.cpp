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

#include "majq/majq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/birkhoff.hpp"
#include "core/channel.hpp"
#include "core/density.hpp"
#include "core/eig.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/majorization.hpp"
#include "core/matrix.hpp"
#include "core/property_engine.hpp"
#include "core/sampling.hpp"
#include "core/tolerances.hpp"

struct majq_matrix {
  majq::ComplexMatrix m;
};

struct majq_channel {
  majq::KrausChannel phi;
};

namespace {

using majq::Error;
using majq::ErrorCode;
using majq::kTol;
using nlohmann::json;

thread_local std::string g_last_error;

majq_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return MAJQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonSquare: return MAJQ_ERR_NON_SQUARE;
    case ErrorCode::NonHermitian: return MAJQ_ERR_NON_HERMITIAN;
    case ErrorCode::NoConvergence: return MAJQ_ERR_NO_CONVERGENCE;
    case ErrorCode::BadSpectrum: return MAJQ_ERR_BAD_SPECTRUM;
    case ErrorCode::LengthMismatch: return MAJQ_ERR_LENGTH_MISMATCH;
    case ErrorCode::NotMajorized: return MAJQ_ERR_NOT_MAJORIZED;
    case ErrorCode::NotBistochastic: return MAJQ_ERR_NOT_BISTOCHASTIC;
    case ErrorCode::NoPerfectMatching: return MAJQ_ERR_NO_PERFECT_MATCHING;
    case ErrorCode::DimensionMismatch: return MAJQ_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotCP: return MAJQ_ERR_NOT_CP;
    case ErrorCode::NotTP: return MAJQ_ERR_NOT_TP;
    case ErrorCode::InvalidState: return MAJQ_ERR_INVALID_STATE;
    case ErrorCode::NotUnitary: return MAJQ_ERR_NOT_UNITARY;
    case ErrorCode::LambdaOutOfRange: return MAJQ_ERR_LAMBDA_OUT_OF_RANGE;
    case ErrorCode::BadDimension: return MAJQ_ERR_BAD_DIMENSION;
    case ErrorCode::SpectrumDegenerate: return MAJQ_ERR_SPECTRUM_DEGENERATE;
    case ErrorCode::NotUnital: return MAJQ_ERR_NOT_UNITAL;
  }
  return MAJQ_ERR_UNKNOWN;
}

// Every API entry funnels through here so the thread-local message and the
// exception-to-status translation stay in one place.
template <typename Fn>
majq_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    g_last_error = std::string("bad JSON: ") + e.what();
    return MAJQ_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MAJQ_ERR_UNKNOWN;
  }
}

majq_status fail(majq_status status, const char* message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

majq_status emit(const json& doc, char** out_json) {
  *out_json = dup_string(doc.dump());
  return MAJQ_OK;
}

json parse(const char* text) { return json::parse(text); }

double or_default(double tol, double fallback) {
  return tol > 0.0 ? tol : fallback;
}

majq::FamilyKind to_family(majq_family kind) {
  switch (kind) {
    case MAJQ_FAMILY_UNITARY: return majq::FamilyKind::Unitary;
    case MAJQ_FAMILY_TRANSPOSE: return majq::FamilyKind::Transpose;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown channel family");
}

}  // namespace

extern "C" {

const char* majq_version(void) { return "0.1.0"; }

const char* majq_status_name(majq_status status) {
  switch (status) {
    case MAJQ_OK: return "OK";
    case MAJQ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MAJQ_ERR_NON_SQUARE: return "NonSquare";
    case MAJQ_ERR_NON_HERMITIAN: return "NonHermitian";
    case MAJQ_ERR_NO_CONVERGENCE: return "NoConvergence";
    case MAJQ_ERR_BAD_SPECTRUM: return "BadSpectrum";
    case MAJQ_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case MAJQ_ERR_NOT_MAJORIZED: return "NotMajorized";
    case MAJQ_ERR_NOT_BISTOCHASTIC: return "NotBistochastic";
    case MAJQ_ERR_NO_PERFECT_MATCHING: return "NoPerfectMatching";
    case MAJQ_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case MAJQ_ERR_NOT_CP: return "NotCP";
    case MAJQ_ERR_NOT_TP: return "NotTP";
    case MAJQ_ERR_INVALID_STATE: return "InvalidState";
    case MAJQ_ERR_NOT_UNITARY: return "NotUnitary";
    case MAJQ_ERR_LAMBDA_OUT_OF_RANGE: return "LambdaOutOfRange";
    case MAJQ_ERR_BAD_DIMENSION: return "BadDimension";
    case MAJQ_ERR_SPECTRUM_DEGENERATE: return "SpectrumDegenerate";
    case MAJQ_ERR_NOT_UNITAL: return "NotUnital";
    case MAJQ_ERR_UNKNOWN: break;
  }
  return "Unknown";
}

const char* majq_last_error(void) { return g_last_error.c_str(); }

void majq_string_free(char* s) { std::free(s); }

/* ---- matrices ---------------------------------------------------------- */

majq_status majq_matrix_parse(const char* text, majq_matrix** out) {
  if (text == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_matrix{majq::matrix_from_json(parse(text))};
    return MAJQ_OK;
  });
}

majq_status majq_matrix_create(size_t rows, size_t cols, const double* entries,
                               majq_matrix** out) {
  if (entries == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    majq::ComplexMatrix m(rows, cols);
    for (size_t i = 0; i < rows * cols; ++i) {
      m.data()[i] = majq::Complex(entries[2 * i], entries[2 * i + 1]);
    }
    if (!m.all_finite())
      throw Error(ErrorCode::InvalidArgument, "matrix has NaN or Inf entries");
    *out = new majq_matrix{std::move(m)};
    return MAJQ_OK;
  });
}

void majq_matrix_free(majq_matrix* m) { delete m; }

majq_status majq_matrix_to_json(const majq_matrix* m, char** out_json) {
  if (m == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(majq::matrix_to_json(m->m), out_json); });
}

majq_status majq_matrix_rows(const majq_matrix* m, size_t* out) {
  if (m == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = m->m.rows();
  return MAJQ_OK;
}

majq_status majq_matrix_cols(const majq_matrix* m, size_t* out) {
  if (m == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = m->m.cols();
  return MAJQ_OK;
}

majq_status majq_hermitian_eigenvalues(const majq_matrix* m,
                                       double* out_eigenvalues) {
  if (m == nullptr || out_eigenvalues == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto eig = majq::hermitian_eig(m->m);
    for (size_t i = 0; i < eig.eigenvalues.size(); ++i) {
      out_eigenvalues[i] = eig.eigenvalues[i];
    }
    return MAJQ_OK;
  });
}

majq_status majq_random_haar_unitary(size_t n, uint64_t seed,
                                     majq_matrix** out) {
  if (out == nullptr) return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_matrix{majq::random_haar_unitary(n, seed)};
    return MAJQ_OK;
  });
}

majq_status majq_random_density(size_t n, const double* spectrum,
                                size_t spectrum_len, uint64_t seed,
                                majq_matrix** out) {
  if (out == nullptr) return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    majq::DensityMatrix rho =
        spectrum == nullptr
            ? majq::random_density(n, seed)
            : majq::random_density(
                  n, std::vector<double>(spectrum, spectrum + spectrum_len),
                  seed);
    *out = new majq_matrix{rho.matrix()};
    return MAJQ_OK;
  });
}

/* ---- vector majorization ----------------------------------------------- */

majq_status majq_majorizes_vec(const char* u_json, const char* v_json,
                               double tol, int* out_result) {
  if (u_json == nullptr || v_json == nullptr || out_result == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto u = majq::real_vector_from_json(parse(u_json));
    const auto v = majq::real_vector_from_json(parse(v_json));
    *out_result =
        majq::majorizes_vec(u, v, or_default(tol, kTol.majorization)) ? 1 : 0;
    return MAJQ_OK;
  });
}

majq_status majq_hlp_witness(const char* u_json, const char* v_json,
                             char** out_json) {
  if (u_json == nullptr || v_json == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto u = majq::real_vector_from_json(parse(u_json));
    const auto v = majq::real_vector_from_json(parse(v_json));
    return emit(majq::real_matrix_to_json(majq::hlp_witness(u, v)), out_json);
  });
}

majq_status majq_is_bistochastic(const char* b_json, double tol,
                                 int* out_result) {
  if (b_json == nullptr || out_result == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto b = majq::real_matrix_from_json(parse(b_json));
    *out_result =
        majq::is_bistochastic(b, or_default(tol, kTol.bistochastic)) ? 1 : 0;
    return MAJQ_OK;
  });
}

majq_status majq_birkhoff(const char* b_json, double tol, char** out_json) {
  if (b_json == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto b = majq::real_matrix_from_json(parse(b_json));
    const auto d =
        majq::birkhoff_decompose(b, or_default(tol, kTol.bistochastic));
    return emit(majq::birkhoff_to_json(d), out_json);
  });
}

majq_status majq_classify_vector_map(const char* t_json, double tol,
                                     char** out_json) {
  if (t_json == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto t = majq::real_matrix_from_json(parse(t_json));
    const auto c = majq::classify_vector_map(t, or_default(tol, 1e-9));
    return emit(majq::vector_map_class_to_json(c), out_json);
  });
}

/* ---- operator majorization --------------------------------------------- */

majq_status majq_majorizes_op(const majq_matrix* a, const majq_matrix* b,
                              double tol, int* out_result) {
  if (a == nullptr || b == nullptr || out_result == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::HermitianMatrix ha(a->m);
    const majq::HermitianMatrix hb(b->m);
    *out_result =
        majq::majorizes_op(ha, hb, or_default(tol, kTol.majorization)) ? 1 : 0;
    return MAJQ_OK;
  });
}

majq_status majq_mixed_unitary_witness(const majq_matrix* a,
                                       const majq_matrix* b, char** out_json) {
  if (a == nullptr || b == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::HermitianMatrix ha(a->m);
    const majq::HermitianMatrix hb(b->m);
    const auto w = majq::mixed_unitary_witness(ha, hb);
    return emit(majq::witness_to_json(w), out_json);
  });
}

/* ---- channels ----------------------------------------------------------- */

majq_status majq_channel_parse(const char* text, majq_channel** out) {
  if (text == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_channel{majq::channel_from_json(parse(text))};
    return MAJQ_OK;
  });
}

void majq_channel_free(majq_channel* phi) { delete phi; }

majq_status majq_channel_to_json(const majq_channel* phi, char** out_json) {
  if (phi == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { return emit(majq::channel_to_json(phi->phi), out_json); });
}

majq_status majq_channel_dim(const majq_channel* phi, size_t* out) {
  if (phi == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = phi->phi.dim();
  return MAJQ_OK;
}

majq_status majq_channel_apply(const majq_channel* phi, const majq_matrix* rho,
                               majq_matrix** out) {
  if (phi == nullptr || rho == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::DensityMatrix in(rho->m);
    *out = new majq_matrix{majq::apply(phi->phi, in).matrix()};
    return MAJQ_OK;
  });
}

majq_status majq_channel_choi(const majq_channel* phi, char** out_json) {
  if (phi == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { return emit(majq::choi_to_json(majq::choi(phi->phi)), out_json); });
}

majq_status majq_lambda_range(majq_family kind, size_t n, double* out_lo,
                              double* out_hi) {
  if (out_lo == nullptr || out_hi == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto range = majq::lambda_range(to_family(kind), n);
    *out_lo = range.lo;
    *out_hi = range.hi;
    return MAJQ_OK;
  });
}

majq_status majq_make_constant(const majq_matrix* omega, majq_channel** out) {
  if (omega == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::DensityMatrix w(omega->m);
    *out = new majq_channel{majq::constant_channel(w)};
    return MAJQ_OK;
  });
}

majq_status majq_make_dep_unitary(double lambda, const majq_matrix* unitary,
                                  majq_channel** out) {
  if (unitary == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_channel{majq::depolarized_unitary(lambda, unitary->m)};
    return MAJQ_OK;
  });
}

majq_status majq_make_dep_transpose(double lambda, const majq_matrix* unitary,
                                    majq_channel** out) {
  if (unitary == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_channel{majq::depolarized_transpose(lambda, unitary->m)};
    return MAJQ_OK;
  });
}

majq_status majq_random_unital_channel(size_t n, size_t kraus_count,
                                       uint64_t seed, majq_channel** out) {
  if (out == nullptr) return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new majq_channel{majq::random_unital_channel(n, kraus_count, seed)};
    return MAJQ_OK;
  });
}

majq_status majq_choi_is_cp(const char* choi_json, double tol, int* out_result,
                            double* out_min_eigenvalue) {
  if (choi_json == nullptr || out_result == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto j = majq::choi_from_json(parse(choi_json));
    const auto eig = majq::hermitian_eig(j.matrix());
    const double min_eig = eig.eigenvalues.back();
    *out_result = min_eig >= -or_default(tol, kTol.cp) ? 1 : 0;
    if (out_min_eigenvalue != nullptr) *out_min_eigenvalue = min_eig;
    return MAJQ_OK;
  });
}

majq_status majq_kraus_from_choi(const char* choi_json, double tol,
                                 majq_channel** out) {
  if (choi_json == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto j = majq::choi_from_json(parse(choi_json));
    *out = new majq_channel{
        majq::kraus_from_choi(j, or_default(tol, kTol.cp))};
    return MAJQ_OK;
  });
}

majq_status majq_classify_channel(const majq_channel* phi, double tol,
                                  char** out_json) {
  if (phi == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto cls =
        majq::classify_channel(phi->phi, or_default(tol, kTol.classify));
    return emit(majq::channel_class_to_json(cls), out_json);
  });
}

/* ---- property engine ---------------------------------------------------- */

majq_status majq_von_neumann_entropy(const majq_matrix* rho, double* out) {
  if (rho == nullptr || out == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::DensityMatrix d(rho->m);
    *out = majq::von_neumann_entropy(d);
    return MAJQ_OK;
  });
}

majq_status majq_test_preservation(const majq_channel* phi, uint64_t trials,
                                   uint64_t seed, char** out_json) {
  if (phi == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = majq::test_preservation(phi->phi, trials, seed);
    return emit(majq::report_to_json(report), out_json);
  });
}

majq_status majq_test_li(size_t n, uint64_t trials, uint64_t seed,
                         char** out_json) {
  if (out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = majq::test_li_property(n, trials, seed);
    return emit(majq::report_to_json(report), out_json);
  });
}

majq_status majq_test_orbit(const majq_channel* phi, const majq_matrix* rho0,
                            uint64_t trials, uint64_t seed, char** out_json) {
  if (phi == nullptr || rho0 == nullptr || out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const majq::DensityMatrix d(rho0->m);
    const auto report = majq::test_orbit_preservation(phi->phi, d, trials, seed);
    return emit(majq::report_to_json(report), out_json);
  });
}

majq_status majq_explore_conjecture(size_t d, uint64_t channel_samples,
                                    uint64_t trials_per_channel, uint64_t seed,
                                    char** out_json) {
  if (out_json == nullptr)
    return fail(MAJQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto summary =
        majq::conjecture_explorer(d, channel_samples, trials_per_channel, seed);
    return emit(majq::explorer_to_json(summary), out_json);
  });
}

}  // extern "C"
