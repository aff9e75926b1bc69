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

#include <filesystem>
#include <fstream>

#include "divisi/random.hpp"
#include "divisi/serialize.hpp"

namespace divisi {
namespace {

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

TEST(Serialize, MatrixRoundTripIsExact) {
  Rng rng(90);
  const ComplexMatrix u = random_unitary(8, rng);
  EXPECT_EQ(matrix_from_json(matrix_to_json(u)), u);
  EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(u).dump())), u);
}

TEST(Serialize, MatrixLayout) {
  const ComplexMatrix m = {{Complex(1, 2), 3.0}};
  EXPECT_EQ(matrix_to_json(m).dump(), "[[[1.0,2.0],[3.0,0.0]]]");
}

TEST(Serialize, MalformedMatrices) {
  EXPECT_THROW((void)matrix_from_json(Json::parse("[]")), FormatError);
  EXPECT_THROW((void)matrix_from_json(Json::parse("[[[1,0]],[[1,0],[0,0]]]")), FormatError);
  EXPECT_THROW((void)matrix_from_json(Json::parse("[[[1,0,0]]]")), FormatError);
  EXPECT_THROW((void)matrix_from_json(Json::parse("[[\"x\"]]")), FormatError);
}

TEST(Serialize, StateRoundTrip) {
  Rng rng(91);
  const DensityMatrix rho = DensityMatrix::validated(random_density_matrix(4, 2, rng));
  const DensityMatrix back = state_from_json(state_to_json(rho));
  EXPECT_EQ(back.mat(), rho.mat());
  EXPECT_EQ(state_to_json(rho)["qubits"], 2);
}

TEST(Serialize, StateFromAmplitudes) {
  const Json j = Json::parse(R"({"qubits": 1, "amps": [[0.6, 0], [0, 0.8]]})");
  const DensityMatrix rho = state_from_json(j);
  EXPECT_NEAR(rho.mat()(0, 0).real(), 0.36, 1e-15);
  EXPECT_NEAR(rho.mat()(0, 1).imag(), -0.48, 1e-15);
  const PureState p = PureState::from_amplitudes({0.6, Complex(0, 0.8)});
  EXPECT_EQ(state_from_json(pure_state_to_json(p)).mat(), rho.mat());
}

TEST(Serialize, StateErrors) {
  EXPECT_THROW((void)state_from_json(Json::parse(R"({"matrix": [[[1,0]]]})")), FormatError);
  EXPECT_THROW((void)state_from_json(Json::parse(R"({"qubits": 2, "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]})")),
               DimensionError);
  EXPECT_THROW((void)state_from_json(Json::parse(R"({"qubits": 1, "matrix": [[[0.5,0],[0,0]],[[0,0],[0.4,0]]]})")),
               ValidationError);
  EXPECT_NO_THROW((void)state_from_json(
      Json::parse(R"({"qubits": 1, "matrix": [[[0.5,0],[0,0]],[[0,0],[0.499,0]]]})"),
      StateTolerance::lenient()));
  EXPECT_THROW((void)state_from_json(Json::parse(R"({"qubits": 1, "amps": [[1,0]]})")),
               DimensionError);
}

TEST(Serialize, UnitaryAndKrausRoundTrip) {
  Rng rng(92);
  const ComplexMatrix u = random_unitary(4, rng);
  const Json ju = unitary_to_json(u);
  EXPECT_EQ(ju["qubits"], 2);
  EXPECT_EQ(unitary_from_json(ju), u);
  EXPECT_THROW((void)unitary_from_json(Json::parse(R"({"qubits": 2, "matrix": [[[1,0]]]})")),
               DimensionError);

  const UnitaryDilation d =
      UnitaryDilation::make(random_unitary(8, rng), Bipartition::contiguous(2, 1), maximally_mixed(1));
  const KrausChannel k = dilation_to_kraus(d);
  const KrausChannel back = kraus_from_json(kraus_to_json(k));
  ASSERT_EQ(back.ops().size(), k.ops().size());
  for (std::size_t i = 0; i < k.ops().size(); ++i) EXPECT_EQ(back.ops()[i], k.ops()[i]);
  EXPECT_THROW((void)kraus_from_json(Json::parse(R"({"in_qubits": 1, "out_qubits": 1, "ops": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]})")),
               ValidationError);
}

TEST(Serialize, ReportKeys) {
  const ScenarioReport r = run_scenario(build_scenario(ScenarioName::W, Mode::Exact));
  const Json j = to_json(r.analysis);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"step", "system_channel", "theorem2"}));
  EXPECT_EQ(j["step"]["sys_verdict"], "PIndivisibleStep");
  EXPECT_EQ(j["step"]["metric"], "trace");
  EXPECT_EQ(j["system_channel"]["unital"], false);
  EXPECT_EQ(j["theorem2"]["eq6"]["holds"], true);
  EXPECT_DOUBLE_EQ(j["theorem2"]["gamma"].get<double>(), r.analysis.theorem2.gamma);
}

TEST(Serialize, Files) {
  const auto path = temp_file("divisi_serialize_test.json");
  const Json j = unitary_to_json(ComplexMatrix::identity(2));
  write_json_file(path, j);
  EXPECT_EQ(read_json_file(path), j);
  std::filesystem::remove(path);
  EXPECT_THROW((void)read_json_file(path), FormatError);
  {
    std::ofstream(path) << "{not json";
  }
  EXPECT_THROW((void)read_json_file(path), FormatError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace divisi
