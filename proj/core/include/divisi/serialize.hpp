// Copyright 2026 The divisi Authors
// SPDX-License-Identifier: Apache-2.0
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

#ifndef DIVISI_SERIALIZE_HPP_
#define DIVISI_SERIALIZE_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "divisi/channels.hpp"
#include "divisi/divisibility.hpp"
#include "divisi/matkernel.hpp"
#include "divisi/scenarios.hpp"
#include "divisi/states.hpp"

// File formats:
//   matrix   [[ [re, im], ... ], ...]                  row-major
//   state    {"qubits": N, "matrix": matrix}  or  {"qubits": N, "amps": [[re, im], ...]}
//   unitary  {"qubits": N, "matrix": matrix}
//   kraus    {"in_qubits": n, "out_qubits": m, "ops": [matrix, ...]}
//
// Malformed documents raise FormatError; well-formed documents describing
// invalid objects raise ValidationError / DimensionError.

namespace divisi {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json state_to_json(const DensityMatrix& rho);
Json pure_state_to_json(const PureState& p);
DensityMatrix state_from_json(const Json& j, StateTolerance tol = StateTolerance::strict());

Json unitary_to_json(const ComplexMatrix& u);
// Shape checks only; unitarity is checked when a dilation is built.
ComplexMatrix unitary_from_json(const Json& j);

Json kraus_to_json(const KrausChannel& k);
KrausChannel kraus_from_json(const Json& j);

Json to_json(const StepReport& r);
Json to_json(const Theorem2Report& r);
Json to_json(const UnitalityReport& r);
Json to_json(const AnalysisReport& r);
Json to_json(const WitnessResult& r);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace divisi

#endif  // DIVISI_SERIALIZE_HPP_
