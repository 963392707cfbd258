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

#ifndef MAJQ_CORE_JSON_IO_HPP_
#define MAJQ_CORE_JSON_IO_HPP_

#include <json.hpp>

#include "core/birkhoff.hpp"
#include "core/channel.hpp"
#include "core/majorization.hpp"
#include "core/matrix.hpp"
#include "core/property_engine.hpp"

// Document formats, all UTF-8 JSON:
//   complex matrix  — array of rows, each entry a two-element [re, im] array
//                     (bare numbers are accepted on input as re-only)
//   real matrix     — array of rows of bare numbers
//   channel         — {"dim": n, "kraus": [matrix…]}
//   choi            — {"dim": n, "choi": matrix}
//   report          — {"trials", "failures", "seed", "elapsed_s",
//                      "counterexample": {…} | null}
namespace majq {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const nlohmann::json& j);

std::vector<double> real_vector_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const KrausChannel& phi);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json choi_to_json(const ChoiMatrix& j);
ChoiMatrix choi_from_json(const nlohmann::json& j);

nlohmann::json birkhoff_to_json(const BirkhoffDecomposition& d);

nlohmann::json witness_to_json(const MixedUnitaryWitness& w);

nlohmann::json vector_map_class_to_json(const VectorMapClass& c);

nlohmann::json channel_class_to_json(const ChannelClass& c);

nlohmann::json report_to_json(const TrialReport& r);

nlohmann::json explorer_to_json(const ExplorerSummary& s);

}  // namespace majq

#endif  // MAJQ_CORE_JSON_IO_HPP_
