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

#include "divisi/scenarios.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace divisi {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
const double kInvSqrt6 = 1.0 / std::sqrt(6.0);

ComplexMatrix ket_bra(std::string_view out_bits, std::string_view in_bits) {
  const PureState out = PureState::basis(out_bits);
  const PureState in = PureState::basis(in_bits);
  return outer(out.amps(), in.amps());
}

struct Term {
  double coeff;
  const char* out;
  const char* in;
};

ComplexMatrix from_terms(std::size_t qubits, std::initializer_list<Term> terms) {
  ComplexMatrix m(qubit_dim(qubits), qubit_dim(qubits));
  for (const Term& t : terms) m += Complex(t.coeff) * ket_bra(t.out, t.in);
  return m;
}

// Replace every irrational magnitude by its three-decimal printed form.
double truncate_constant(double x) {
  const double mag = std::abs(x);
  const double sign = x < 0 ? -1.0 : 1.0;
  if (std::abs(mag - kInvSqrt2) < 1e-12) return sign * kPaperTruncation2;
  if (std::abs(mag - kInvSqrt3) < 1e-12) return sign * kPaperTruncation3;
  if (std::abs(mag - kInvSqrt6) < 1e-12) return sign * kPaperTruncation6;
  return x;
}

ComplexMatrix truncate_entries(ComplexMatrix m) {
  for (Complex& z : m.entries()) z = {truncate_constant(z.real()), truncate_constant(z.imag())};
  return m;
}

// W-state preparation from |100>. Two printed terms are corrected: the
// stray (1/sqrt3)|000><100| is dropped and (1/sqrt3)|001><001| completes the
// |001> column; the |100> and |011> columns are as published.
ComplexMatrix w_unitary(double c3, double c6, double c2) {
  return from_terms(3, {
      {1.0, "000", "000"},
      {c3, "001", "001"},
      {-c3, "001", "010"},
      {c3, "001", "100"},
      {-c3, "010", "001"},
      {c3, "010", "011"},
      {c3, "010", "100"},
      {1.0, "011", "101"},
      {c3, "100", "010"},
      {-c3, "100", "011"},
      {c3, "100", "100"},
      {1.0, "101", "110"},
      {c6, "110", "001"},
      {c6, "110", "010"},
      {c6, "110", "011"},
      {c2, "110", "111"},
      {c6, "111", "001"},
      {c6, "111", "010"},
      {c6, "111", "011"},
      {-c2, "111", "111"},
  });
}

DensityMatrix pure(std::vector<Complex> amps, Mode mode) {
  const double tol = mode == Mode::Exact ? 1e-9 : StateTolerance::lenient().trace;
  return density_from_pure(PureState::from_amplitudes(std::move(amps), tol));
}

DensityMatrix basis_density(std::string_view bits) {
  return density_from_pure(PureState::basis(bits));
}

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

namespace gates {
ComplexMatrix identity(std::size_t qubits) { return ComplexMatrix::identity(qubit_dim(qubits)); }
ComplexMatrix hadamard() { return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}; }
ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix cnot() {
  return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
}
}  // namespace gates

std::string_view to_string(ScenarioName name) {
  switch (name) {
    case ScenarioName::Bell: return "bell";
    case ScenarioName::GHZ: return "ghz";
    case ScenarioName::W: return "w";
  }
  return "?";
}

std::string_view to_string(Mode mode) { return mode == Mode::Exact ? "exact" : "paper"; }

ScenarioName parse_scenario_name(std::string_view text) {
  const std::string s = lower(text);
  if (s == "bell") return ScenarioName::Bell;
  if (s == "ghz") return ScenarioName::GHZ;
  if (s == "w") return ScenarioName::W;
  throw ValidationError("unknown scenario '" + std::string(text) + "' (expected bell, ghz or w)");
}

Mode parse_mode(std::string_view text) {
  const std::string s = lower(text);
  if (s == "exact") return Mode::Exact;
  if (s == "paper") return Mode::PaperTruncated;
  throw ValidationError("unknown mode '" + std::string(text) + "' (expected exact or paper)");
}

UnitaryDilation Scenario::dilation() const {
  const std::string zeros(split.environment().size(), '0');
  return UnitaryDilation::make(u, split, basis_density(zeros), unitarity_tolerance());
}

Scenario build_scenario(ScenarioName name, Mode mode) {
  using namespace gates;
  const bool exact = mode == Mode::Exact;
  const double c2 = exact ? kInvSqrt2 : kPaperTruncation2;

  Scenario s;
  s.name = name;
  s.mode = mode;
  switch (name) {
    case ScenarioName::Bell: {
      const ComplexMatrix u = cnot() * kron(hadamard(), identity());
      s.u = exact ? u : truncate_entries(u);
      s.split = Bipartition::contiguous(1, 1);
      s.s1 = pure({c2, 0.0, 0.0, c2}, mode);
      s.s2 = pure({0.5, 0.5, 0.5, 0.5}, mode);
      break;
    }
    case ScenarioName::GHZ: {
      const ComplexMatrix u =
          kron(identity(), cnot()) * kron(cnot(), identity()) * kron(hadamard(), identity(2));
      s.u = exact ? u : truncate_entries(u);
      s.split = Bipartition::contiguous(2, 1);
      s.s1 = basis_density("100");
      s.s2 = basis_density("011");
      break;
    }
    case ScenarioName::W: {
      s.u = exact ? w_unitary(kInvSqrt3, kInvSqrt6, kInvSqrt2)
                  : w_unitary(kPaperTruncation3, kPaperTruncation6, kPaperTruncation2);
      s.split = Bipartition::contiguous(2, 1);
      s.s1 = basis_density("100");
      std::vector<Complex> amps(8);
      amps[0b100] = c2;
      amps[0b011] = c2;
      s.s2 = pure(std::move(amps), mode);
      break;
    }
  }
  return s;
}

std::array<double, 6> printed_table(ScenarioName name) {
  switch (name) {
    case ScenarioName::Bell:
      return {0.500000, 0.499849, 0.500000, 0.499849, 0.707107, 0.706893};
    case ScenarioName::GHZ:
      return {1.000000, 0.999698, 1.000000, 0.000000, 1.000000, 0.999698};
    case ScenarioName::W:
      return {0.500000, 0.693130, 0.500000, 0.117708, 0.707107, 0.706249};
  }
  return {};
}

AnalysisReport analyze(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2,
                       Metric metric, double verdict_tol) {
  AnalysisReport r;
  r.step = probe_step(d, s1, s2, metric, verdict_tol);
  r.system_channel =
      is_unital(dilation_to_kraus(d), std::max(kDefaultUnitarityTol, d.unitarity_tolerance()));
  r.theorem2 = theorem2_report(d, s1, s2);
  return r;
}

ScenarioReport run_scenario(const Scenario& s, Metric metric) {
  ScenarioReport rep;
  rep.name = s.name;
  rep.mode = s.mode;
  rep.analysis = analyze(s.dilation(), s.s1, s.s2, metric, s.verdict_tolerance());

  if (s.mode == Mode::PaperTruncated && metric == Metric::TraceNorm) {
    static constexpr std::array<const char*, 6> kRows = {
        "system input", "system output", "environment input",
        "environment output", "full input", "full output"};
    const StepReport& st = rep.analysis.step;
    const std::array<double, 6> got = {st.d_sys_in, st.d_sys_out, st.d_env_in,
                                       st.d_env_out, st.d_full_in, st.d_full_out};
    const std::array<double, 6> want = printed_table(s.name);
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (std::abs(got[i] - want[i]) > kPaperTableBand) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s distance %.6f differs from published %.6f",
                      kRows[i], got[i], want[i]);
        rep.warnings.emplace_back(buf);
      }
    }
  }
  return rep;
}

}  // namespace divisi
