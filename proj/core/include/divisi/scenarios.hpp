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

#ifndef DIVISI_SCENARIOS_HPP_
#define DIVISI_SCENARIOS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "divisi/channels.hpp"
#include "divisi/divisibility.hpp"
#include "divisi/states.hpp"

namespace divisi {

enum class ScenarioName { Bell, GHZ, W };

// Exact: closed-form constants. PaperTruncated: 1/sqrt2, 1/sqrt3, 1/sqrt6
// replaced by 0.707, 0.577, 0.408 without renormalizing.
enum class Mode { Exact, PaperTruncated };

std::string_view to_string(ScenarioName name);
std::string_view to_string(Mode mode);
// Accepts "bell", "ghz", "w" (any case). Throws ValidationError otherwise.
ScenarioName parse_scenario_name(std::string_view text);
Mode parse_mode(std::string_view text);

inline constexpr double kPaperTruncation2 = 0.707;
inline constexpr double kPaperTruncation3 = 0.577;
inline constexpr double kPaperTruncation6 = 0.408;
inline constexpr double kPaperUnitarityTol = 2e-3;
inline constexpr double kPaperVerdictTol = 1e-6;
inline constexpr double kPaperTableBand = 2e-3;

struct Scenario {
  ScenarioName name = ScenarioName::Bell;
  Mode mode = Mode::Exact;
  ComplexMatrix u;
  Bipartition split = Bipartition::contiguous(1, 1);
  DensityMatrix s1 = maximally_mixed(2);
  DensityMatrix s2 = maximally_mixed(2);

  double unitarity_tolerance() const {
    return mode == Mode::Exact ? kDefaultUnitarityTol : kPaperUnitarityTol;
  }
  double verdict_tolerance() const {
    return mode == Mode::Exact ? kDefaultVerdictTol : kPaperVerdictTol;
  }
  // Dilation with the environment starting in |0...0>.
  UnitaryDilation dilation() const;
};

Scenario build_scenario(ScenarioName name, Mode mode);

// The six published distances in table order: system in/out, environment
// in/out, full in/out.
std::array<double, 6> printed_table(ScenarioName name);

// Everything reported for one step of a dilation on a pair of inputs.
struct AnalysisReport {
  StepReport step;
  UnitalityReport system_channel;  // induced by env_init
  Theorem2Report theorem2;
};

AnalysisReport analyze(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2,
                       Metric metric = Metric::TraceNorm,
                       double verdict_tol = kDefaultVerdictTol);

struct ScenarioReport {
  ScenarioName name = ScenarioName::Bell;
  Mode mode = Mode::Exact;
  AnalysisReport analysis;
  // Truncated-mode table entries that miss the printed value by more than
  // kPaperTableBand.
  std::vector<std::string> warnings;
};

ScenarioReport run_scenario(const Scenario& s, Metric metric = Metric::TraceNorm);

// Small gate set used by the builders.
namespace gates {
ComplexMatrix identity(std::size_t qubits = 1);
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_z();
ComplexMatrix cnot();
}  // namespace gates

}  // namespace divisi

#endif  // DIVISI_SCENARIOS_HPP_
