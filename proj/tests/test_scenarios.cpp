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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <tuple>

#include "divisi/scenarios.hpp"

namespace divisi {
namespace {

using Term = std::tuple<double, const char*, const char*>;

std::size_t index_of(const char* bits) { return std::stoul(bits, nullptr, 2); }

ComplexMatrix from_terms(std::size_t qubits, std::initializer_list<Term> terms) {
  ComplexMatrix m(qubit_dim(qubits), qubit_dim(qubits));
  for (const auto& [c, ket, bra] : terms) m(index_of(ket), index_of(bra)) += c;
  return m;
}

const double c2 = 1.0 / std::sqrt(2.0);
const double c3 = 1.0 / std::sqrt(3.0);
const double c6 = 1.0 / std::sqrt(6.0);

TEST(Scenarios, BellGateCompositionMatchesExpansion) {
  const ComplexMatrix expected = from_terms(
      2, {{c2, "00", "00"}, {c2, "00", "10"}, {c2, "01", "01"}, {c2, "01", "11"},
          {c2, "10", "01"}, {c2, "11", "00"}, {-c2, "11", "10"}, {-c2, "10", "11"}});
  const Scenario s = build_scenario(ScenarioName::Bell, Mode::Exact);
  EXPECT_LE(max_abs_diff(s.u, expected), 1e-15);
  EXPECT_LE(max_abs_diff(s.u, gates::cnot() * kron(gates::hadamard(), gates::identity())), 0.0);
}

TEST(Scenarios, GhzGateCompositionMatchesExpansion) {
  const ComplexMatrix expected = from_terms(
      3, {{c2, "000", "000"},  {c2, "000", "100"},  {c2, "001", "001"}, {c2, "001", "101"},
          {c2, "010", "011"},  {c2, "010", "111"},  {c2, "011", "010"}, {c2, "011", "110"},
          {c2, "100", "010"},  {-c2, "100", "110"}, {c2, "101", "011"}, {-c2, "101", "111"},
          {c2, "110", "001"},  {-c2, "110", "101"}, {c2, "111", "000"}, {-c2, "111", "100"}});
  const Scenario s = build_scenario(ScenarioName::GHZ, Mode::Exact);
  EXPECT_LE(max_abs_diff(s.u, expected), 1e-15);
  const ComplexMatrix out = s.u * ComplexMatrix(8, 1, {1, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_NEAR(out(0, 0).real(), c2, 1e-15);
  EXPECT_NEAR(out(7, 0).real(), c2, 1e-15);
}

TEST(Scenarios, WUnitaryIsCorrectedExpansion) {
  const ComplexMatrix expected = from_terms(
      3, {{1.0, "000", "000"}, {c3, "001", "001"},  {-c3, "001", "010"}, {c3, "001", "100"},
          {-c3, "010", "001"}, {c3, "010", "011"},  {c3, "010", "100"},  {1.0, "011", "101"},
          {c3, "100", "010"},  {-c3, "100", "011"}, {c3, "100", "100"},  {1.0, "101", "110"},
          {c6, "110", "001"},  {c6, "110", "010"},  {c6, "110", "011"},  {c2, "110", "111"},
          {c6, "111", "001"},  {c6, "111", "010"},  {c6, "111", "011"},  {-c2, "111", "111"}});
  const Scenario s = build_scenario(ScenarioName::W, Mode::Exact);
  EXPECT_LE(max_abs_diff(s.u, expected), 1e-15);
  EXPECT_LE(unitarity_deviation(s.u), 1e-15);
  // U|100> is the W state.
  for (std::size_t row = 0; row < 8; ++row) {
    const double want = (row == 0b001 || row == 0b010 || row == 0b100) ? c3 : 0.0;
    EXPECT_NEAR(s.u(row, 0b100).real(), want, 1e-15) << row;
  }
}

TEST(Scenarios, ExactModesAreUnitaryAndInputsStrict) {
  for (ScenarioName name : {ScenarioName::Bell, ScenarioName::GHZ, ScenarioName::W}) {
    const Scenario s = build_scenario(name, Mode::Exact);
    EXPECT_LE(unitarity_deviation(s.u), 1e-12) << to_string(name);
    EXPECT_TRUE(s.dilation().is_strict());
    EXPECT_NEAR(trace(s.s1.mat()).real(), 1.0, 1e-12);
    EXPECT_NEAR(trace(s.s2.mat()).real(), 1.0, 1e-12);
    EXPECT_EQ(s.split.environment().size(), 1u);
  }
}

TEST(Scenarios, PaperModeTruncatesEntries) {
  const Scenario s = build_scenario(ScenarioName::W, Mode::PaperTruncated);
  EXPECT_NEAR(s.u(0b001, 0b001).real(), 0.577, 0.0);
  EXPECT_NEAR(s.u(0b110, 0b001).real(), 0.408, 0.0);
  EXPECT_NEAR(s.u(0b111, 0b111).real(), -0.707, 0.0);
  EXPECT_NEAR(s.u(0b000, 0b000).real(), 1.0, 0.0);
  EXPECT_GT(unitarity_deviation(s.u), 1e-9);
  EXPECT_LE(unitarity_deviation(s.u), kPaperUnitarityTol);
  EXPECT_FALSE(s.dilation().is_strict());
  const Scenario bell = build_scenario(ScenarioName::Bell, Mode::PaperTruncated);
  EXPECT_NEAR(bell.u(0, 0).real(), 0.707, 0.0);
}

TEST(Scenarios, ExactVerdicts) {
  struct Want {
    ScenarioName name;
    Verdict sys;
  };
  for (const Want& w : {Want{ScenarioName::Bell, Verdict::PDivisibleStep},
                        Want{ScenarioName::GHZ, Verdict::PDivisibleStep},
                        Want{ScenarioName::W, Verdict::PIndivisibleStep}}) {
    for (Mode mode : {Mode::Exact, Mode::PaperTruncated}) {
      const ScenarioReport r = run_scenario(build_scenario(w.name, mode));
      EXPECT_EQ(r.analysis.step.sys_verdict, w.sys) << to_string(w.name);
      EXPECT_EQ(r.analysis.step.env_verdict, Verdict::PDivisibleStep);
      EXPECT_EQ(r.analysis.step.full_verdict, Verdict::PDivisibleStep);
    }
  }
}

TEST(Scenarios, PaperModeReproducesPrintedTables) {
  for (ScenarioName name : {ScenarioName::Bell, ScenarioName::GHZ, ScenarioName::W}) {
    const ScenarioReport r = run_scenario(build_scenario(name, Mode::PaperTruncated));
    const StepReport& st = r.analysis.step;
    const std::array<double, 6> got = {st.d_sys_in, st.d_sys_out, st.d_env_in,
                                       st.d_env_out, st.d_full_in, st.d_full_out};
    const std::array<double, 6> printed = printed_table(name);
    for (std::size_t k = 0; k < 6; ++k) {
      EXPECT_NEAR(got[k], printed[k], kPaperTableBand) << to_string(name) << " entry " << k;
    }
    EXPECT_TRUE(r.warnings.empty());
  }
}

TEST(Scenarios, SystemChannelUnitality) {
  EXPECT_TRUE(run_scenario(build_scenario(ScenarioName::Bell, Mode::Exact)).analysis.system_channel.unital);
  EXPECT_TRUE(run_scenario(build_scenario(ScenarioName::GHZ, Mode::Exact)).analysis.system_channel.unital);
  const UnitalityReport w =
      run_scenario(build_scenario(ScenarioName::W, Mode::Exact)).analysis.system_channel;
  EXPECT_FALSE(w.unital);
  EXPECT_NEAR(w.deviation, 2.0 / 3, 1e-12);
}

TEST(Scenarios, WReducedOutputsMatchPrintedEntries) {
  const Scenario s = build_scenario(ScenarioName::W, Mode::Exact);
  const UnitaryDilation d = s.dilation();
  const DensityMatrix r2 = joint_evolve(d, s.s2);
  const ComplexMatrix printed_se2 = from_terms(
      3, {{0.166, "001", "001"}, {0.333, "001", "010"}, {0.117, "001", "110"},
          {0.117, "001", "111"}, {0.333, "010", "001"}, {0.666, "010", "010"},
          {0.235, "010", "110"}, {0.235, "010", "111"}, {0.117, "110", "001"},
          {0.235, "110", "010"}, {0.083, "110", "110"}, {0.083, "110", "111"},
          {0.117, "111", "001"}, {0.235, "111", "010"}, {0.083, "111", "110"},
          {0.083, "111", "111"}});
  EXPECT_LE(max_abs_diff(r2.mat(), printed_se2), 1.5e-3);
  const ComplexMatrix printed_s2 =
      from_terms(2, {{0.166, "00", "00"}, {0.117, "00", "11"}, {0.666, "01", "01"},
                     {0.235, "01", "11"}, {0.117, "11", "00"}, {0.235, "11", "01"},
                     {0.166, "11", "11"}});
  EXPECT_LE(max_abs_diff(partial_trace(r2, d.split(), Subsystem::System).mat(), printed_s2), 1.5e-3);
  const ComplexMatrix printed_e2 =
      from_terms(1, {{0.749, "0", "0"}, {0.083, "0", "1"}, {0.083, "1", "0"}, {0.249, "1", "1"}});
  EXPECT_LE(max_abs_diff(partial_trace(r2, d.split(), Subsystem::Environment).mat(), printed_e2),
            1.5e-3);

  const DensityMatrix r1 = joint_evolve(d, s.s1);
  const ComplexMatrix printed_e1 = from_terms(1, {{0.666, "0", "0"}, {0.333, "1", "1"}});
  EXPECT_LE(max_abs_diff(partial_trace(r1, d.split(), Subsystem::Environment).mat(), printed_e1),
            1.5e-3);
}

TEST(Scenarios, ParseNames) {
  EXPECT_EQ(parse_scenario_name("bell"), ScenarioName::Bell);
  EXPECT_EQ(parse_scenario_name("ghz"), ScenarioName::GHZ);
  EXPECT_EQ(parse_scenario_name("w"), ScenarioName::W);
  EXPECT_THROW((void)parse_scenario_name("cluster"), ValidationError);
  EXPECT_EQ(parse_mode("exact"), Mode::Exact);
  EXPECT_EQ(parse_mode("paper"), Mode::PaperTruncated);
  EXPECT_THROW((void)parse_mode("approx"), ValidationError);
  EXPECT_EQ(to_string(ScenarioName::GHZ), "ghz");
  EXPECT_EQ(to_string(Mode::PaperTruncated), "paper");
}

}  // namespace
}  // namespace divisi
