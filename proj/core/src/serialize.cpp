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

#include "divisi/serialize.hpp"

#include <fstream>
#include <sstream>

namespace divisi {
namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex number must be [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw FormatError(std::string("field \"") + name + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

void check_qubits(const ComplexMatrix& m, std::size_t qubits, const char* what) {
  if (!m.is_square() || m.rows() != qubit_dim(qubits)) {
    throw DimensionError(std::string(what) + " matrix " + m.shape() + " does not match qubits=" +
                         std::to_string(qubits));
  }
}

Json bound_to_json(const BoundCheck& b) {
  Json j;
  j["holds"] = b.holds;
  j["slack"] = b.slack;
  return j;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const Complex& z : m.row(i)) row.push_back(complex_to_json(z));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows differ in length");
    for (const Json& z : row) entries.push_back(complex_from_json(z));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json state_to_json(const DensityMatrix& rho) {
  Json j;
  j["qubits"] = rho.qubits();
  j["matrix"] = matrix_to_json(rho.mat());
  return j;
}

Json pure_state_to_json(const PureState& p) {
  Json j;
  j["qubits"] = p.qubits();
  Json amps = Json::array();
  for (const Complex& z : p.amps()) amps.push_back(complex_to_json(z));
  j["amps"] = std::move(amps);
  return j;
}

DensityMatrix state_from_json(const Json& j, StateTolerance tol) {
  const std::size_t qubits = count_field(j, "qubits");
  if (j.contains("amps")) {
    const Json& a = j.at("amps");
    if (!a.is_array()) throw FormatError("field \"amps\" must be an array");
    std::vector<Complex> amps;
    for (const Json& z : a) amps.push_back(complex_from_json(z));
    if (amps.size() != qubit_dim(qubits)) {
      throw DimensionError("state has " + std::to_string(amps.size()) +
                           " amplitudes, qubits=" + std::to_string(qubits));
    }
    return density_from_pure(PureState::from_amplitudes(std::move(amps), tol.trace));
  }
  ComplexMatrix m = matrix_from_json(field(j, "matrix"));
  check_qubits(m, qubits, "state");
  return DensityMatrix::validated(std::move(m), tol);
}

Json unitary_to_json(const ComplexMatrix& u) {
  std::size_t qubits = 0;
  while (qubit_dim(qubits) < u.rows()) ++qubits;
  Json j;
  j["qubits"] = qubits;
  j["matrix"] = matrix_to_json(u);
  return j;
}

ComplexMatrix unitary_from_json(const Json& j) {
  const std::size_t qubits = count_field(j, "qubits");
  ComplexMatrix m = matrix_from_json(field(j, "matrix"));
  check_qubits(m, qubits, "unitary");
  return m;
}

Json kraus_to_json(const KrausChannel& k) {
  Json j;
  j["in_qubits"] = k.in_qubits();
  j["out_qubits"] = k.out_qubits();
  Json ops = Json::array();
  for (const ComplexMatrix& op : k.ops()) ops.push_back(matrix_to_json(op));
  j["ops"] = std::move(ops);
  return j;
}

KrausChannel kraus_from_json(const Json& j) {
  const std::size_t in = count_field(j, "in_qubits");
  const std::size_t out = count_field(j, "out_qubits");
  const Json& ops_json = field(j, "ops");
  if (!ops_json.is_array()) throw FormatError("field \"ops\" must be an array");
  std::vector<ComplexMatrix> ops;
  for (const Json& op : ops_json) ops.push_back(matrix_from_json(op));
  return KrausChannel::make(in, out, std::move(ops));
}

Json to_json(const StepReport& r) {
  Json j;
  j["metric"] = to_string(r.metric);
  j["tolerance"] = r.tolerance;
  j["d_sys_in"] = r.d_sys_in;
  j["d_sys_out"] = r.d_sys_out;
  j["d_env_in"] = r.d_env_in;
  j["d_env_out"] = r.d_env_out;
  j["d_full_in"] = r.d_full_in;
  j["d_full_out"] = r.d_full_out;
  j["sys_verdict"] = to_string(r.sys_verdict);
  j["env_verdict"] = to_string(r.env_verdict);
  j["full_verdict"] = to_string(r.full_verdict);
  return j;
}

Json to_json(const Theorem2Report& r) {
  Json j;
  j["gamma"] = r.gamma;
  j["gamma_out"] = r.gamma_out;
  j["alpha_s"] = r.alpha_s;
  j["alpha_e"] = r.alpha_e;
  j["beta_s"] = r.beta_s;
  j["beta_e"] = r.beta_e;
  j["t_se"] = r.t_se;
  j["t_s"] = r.t_s;
  j["t_e"] = r.t_e;
  j["eq6_lhs"] = r.eq6_lhs;
  j["eq7_lhs"] = r.eq7_lhs;
  j["eq8_lhs"] = r.eq8_lhs;
  j["product_bound_in"] = bound_to_json(r.product_bound_in);
  j["product_bound_out"] = bound_to_json(r.product_bound_out);
  j["ts_te_bound"] = bound_to_json(r.ts_te_bound);
  j["eq6"] = bound_to_json(r.eq6);
  j["eq7"] = bound_to_json(r.eq7);
  return j;
}

Json to_json(const UnitalityReport& r) {
  Json j;
  j["unital"] = r.unital;
  j["deviation"] = r.deviation;
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["step"] = to_json(r.step);
  j["system_channel"] = to_json(r.system_channel);
  j["theorem2"] = to_json(r.theorem2);
  return j;
}

Json to_json(const WitnessResult& r) {
  Json j;
  j["growth"] = r.growth;
  j["iterations"] = r.iterations;
  j["seed"] = r.seed;
  j["best_restart"] = r.best_restart;
  j["state1"] = state_to_json(r.first);
  j["state2"] = state_to_json(r.second);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace divisi
