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

#include "core/json_io.hpp"

#include <cmath>
#include <utility>

namespace majq {

namespace {

using nlohmann::json;

Complex entry_from_json(const json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return Complex(e[0].get<double>(), e[1].get<double>());
  }
  throw Error(ErrorCode::InvalidArgument,
              "matrix entry must be a number or an [re, im] pair");
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "matrix must be an array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorCode::InvalidArgument, "matrix rows have uneven lengths");
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c]);
  }
  if (!m.all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has NaN or Inf entries");
  }
  return m;
}

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw Error(ErrorCode::InvalidArgument, "matrix must be an array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  std::vector<double> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorCode::InvalidArgument, "matrix rows have uneven lengths");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number()) {
        throw Error(ErrorCode::InvalidArgument, "real matrix entries must be numbers");
      }
      data.push_back(j[i][c].get<double>());
    }
  }
  return RealMatrix(rows, cols, std::move(data));
}

std::vector<double> real_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::InvalidArgument, "vector must be a nonempty array");
  }
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number()) {
      throw Error(ErrorCode::InvalidArgument, "vector entries must be numbers");
    }
    v.push_back(e.get<double>());
  }
  return v;
}

json channel_to_json(const KrausChannel& phi) {
  json kraus = json::array();
  for (const auto& k : phi.kraus()) kraus.push_back(matrix_to_json(k));
  return json{{"dim", phi.dim()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("kraus") ||
      !j["dim"].is_number_unsigned() || !j["kraus"].is_array() ||
      j["kraus"].empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "channel document needs \"dim\" and a nonempty \"kraus\" list");
  }
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(j["kraus"].size());
  for (const auto& k : j["kraus"]) kraus.push_back(matrix_from_json(k));
  return KrausChannel(dim, std::move(kraus));
}

json choi_to_json(const ChoiMatrix& j) {
  return json{{"dim", j.dim()}, {"choi", matrix_to_json(j.matrix())}};
}

ChoiMatrix choi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("choi") ||
      !j["dim"].is_number_unsigned()) {
    throw Error(ErrorCode::InvalidArgument,
                "choi document needs \"dim\" and \"choi\"");
  }
  return ChoiMatrix(j["dim"].get<std::size_t>(), matrix_from_json(j["choi"]));
}

json birkhoff_to_json(const BirkhoffDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back(json{{"weight", t.weight},
                         {"permutation", t.permutation.image()}});
  }
  return json{{"terms", std::move(terms)}};
}

json witness_to_json(const MixedUnitaryWitness& w) {
  json terms = json::array();
  for (const auto& t : w.terms) {
    terms.push_back(json{{"weight", t.weight},
                         {"unitary", matrix_to_json(t.unitary)}});
  }
  return json{{"terms", std::move(terms)}};
}

json vector_map_class_to_json(const VectorMapClass& c) {
  switch (c.tag) {
    case VectorMapClass::Tag::TraceForm:
      return json{{"tag", "trace-form"}, {"a", c.a}};
    case VectorMapClass::Tag::ScaledPermutation:
      return json{{"tag", "scaled-permutation"},
                  {"alpha", c.alpha},
                  {"beta", c.beta},
                  {"permutation", c.perm}};
    case VectorMapClass::Tag::Other:
      break;
  }
  return json{{"tag", "other"}};
}

json channel_class_to_json(const ChannelClass& c) {
  json out{{"tag", channel_class_name(c.tag)},
           {"min_choi_eigenvalue", c.min_choi_eigenvalue},
           {"spectrum_residual", c.spectrum_residual}};
  switch (c.tag) {
    case ChannelClass::Tag::Constant:
      out["omega"] = matrix_to_json(c.omega->matrix());
      out["residual"] = c.residual;
      break;
    case ChannelClass::Tag::DepUnitary:
    case ChannelClass::Tag::DepTranspose:
      out["lambda"] = c.lambda;
      out["unitary"] = matrix_to_json(c.unitary);
      out["residual"] = c.residual;
      break;
    case ChannelClass::Tag::Other:
      break;
  }
  if (c.alternate) {
    out["alternate"] = json{{"tag", channel_class_name(c.alternate->tag)},
                            {"lambda", c.alternate->lambda},
                            {"unitary", matrix_to_json(c.alternate->unitary)}};
  } else {
    out["alternate"] = nullptr;
  }
  return out;
}

json report_to_json(const TrialReport& r) {
  json out{{"trials", r.trials},
           {"failures", r.failures},
           {"seed", r.seed},
           {"elapsed_s", r.elapsed_s}};
  if (r.counterexample) {
    out["counterexample"] = json{
        {"trial", r.counterexample->trial},
        {"rho", matrix_to_json(r.counterexample->lhs)},
        {"sigma", matrix_to_json(r.counterexample->rhs)},
        {"diagnostics", r.counterexample->diagnostics}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json explorer_to_json(const ExplorerSummary& s) {
  json rows = json::array();
  for (const auto& row : s.rows) {
    json r{{"id", row.id},
           {"construction", row.construction},
           {"preserved", row.preserved},
           {"failures", row.failures},
           {"class", row.channel_class}};
    r["lambda"] = std::isnan(row.lambda) ? json(nullptr) : json(row.lambda);
    r["residual"] = std::isnan(row.residual) ? json(nullptr) : json(row.residual);
    rows.push_back(std::move(r));
  }
  return json{{"dim", s.dim},
              {"channel_samples", s.channel_samples},
              {"trials_per_channel", s.trials_per_channel},
              {"seed", s.seed},
              {"elapsed_s", s.elapsed_s},
              {"rows", std::move(rows)}};
}

}  // namespace majq
