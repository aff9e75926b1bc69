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

#ifndef DIVISI_DIVISIBILITY_HPP_
#define DIVISI_DIVISIBILITY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "divisi/channels.hpp"
#include "divisi/matkernel.hpp"
#include "divisi/states.hpp"

namespace divisi {

enum class Metric { TraceNorm, HilbertSchmidt };
enum class Verdict { PDivisibleStep, PIndivisibleStep };

std::string_view to_string(Metric m);
std::string_view to_string(Verdict v);

inline constexpr double kDefaultVerdictTol = 1e-9;

// 1/2 sum |eig(r1 - r2)|
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

// 1/2 Tr[(r1 - r2)^dag (r1 - r2)]
double hs_distance_sq(const DensityMatrix& r1, const DensityMatrix& r2);

double distance(Metric metric, const DensityMatrix& r1, const DensityMatrix& r2);

// Matrix-level forms, for differences that are not themselves states.
double half_trace_norm(const ComplexMatrix& hermitian_delta);
double half_hs_norm_sq(const ComplexMatrix& delta);

// One application of a dilation to a pair of joint S+E inputs.
struct StepReport {
  Metric metric = Metric::TraceNorm;
  double d_full_in = 0.0;
  double d_full_out = 0.0;
  double d_sys_in = 0.0;
  double d_sys_out = 0.0;
  double d_env_in = 0.0;
  double d_env_out = 0.0;
  Verdict sys_verdict = Verdict::PDivisibleStep;
  Verdict env_verdict = Verdict::PDivisibleStep;
  Verdict full_verdict = Verdict::PDivisibleStep;
  double tolerance = kDefaultVerdictTol;
};

Verdict step_verdict(double d_in, double d_out, double tolerance);

StepReport probe_step(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2,
                      Metric metric = Metric::TraceNorm, double tolerance = kDefaultVerdictTol);

// rhs - lhs of an inequality lhs <= rhs.
struct BoundCheck {
  bool holds = true;
  double slack = 0.0;
};

// Every quantity uses the Hilbert-Schmidt surrogate 1/2 Tr[D^dag D].
struct Theorem2Report {
  double gamma = 0.0;      // joint inputs
  double gamma_out = 0.0;  // joint outputs
  double alpha_s = 0.0;    // reduced system inputs
  double alpha_e = 0.0;    // reduced environment inputs
  double beta_s = 0.0;     // reduced system outputs
  double beta_e = 0.0;     // reduced environment outputs
  double t_se = 0.0;
  double t_s = 0.0;
  double t_e = 0.0;
  double eq6_lhs = 0.0;  // beta_s beta_e - alpha_s alpha_e
  double eq7_lhs = 0.0;  // (beta_s - alpha_s) beta_e + (beta_e - alpha_e) alpha_s
  double eq8_lhs = 0.0;  // (beta_s - alpha_s) alpha_e + (beta_e - alpha_e) beta_s
  BoundCheck product_bound_in;   // alpha_s alpha_e <= gamma
  BoundCheck product_bound_out;  // beta_s beta_e <= gamma
  BoundCheck ts_te_bound;        // t_s t_e <= t_se
  BoundCheck eq6;                // eq6_lhs <= 0
  BoundCheck eq7;                // eq7_lhs <= 0
};

// Throws ValidationError if the dilation is strictly unitary and
// |gamma - gamma_out| > 1e-10.
Theorem2Report theorem2_report(const UnitaryDilation& d, const DensityMatrix& s1,
                               const DensityMatrix& s2);

// trace_distance(in) - trace_distance(out); >= 0 for CPTP maps.
double contraction_check(const KrausChannel& k, const DensityMatrix& r1, const DensityMatrix& r2);

struct PurityIdentity {
  double lhs = 0.0;  // sum_ij Tr[A_i A_j] through the correlated dilation
  double rhs = 0.0;  // (sum p_i^2) Tr[sigma^2]
};

PurityIdentity theorem1_identity(const MixedUnitarySpec& spec, const DensityMatrix& sigma);

struct WitnessConfig {
  std::size_t restarts = 8;
  std::size_t iters = 2000;
  double step = 0.25;
  std::uint64_t seed = 0;
  // false: inputs are sigma_i ⊗ env_init with sigma_i pure system states.
  // true: inputs are arbitrary pure states of S+E.
  bool correlated = false;
  // Optional starting amplitudes for restart 0 (system space when
  // uncorrelated, joint space when correlated).
  std::optional<std::pair<std::vector<Complex>, std::vector<Complex>>> initial_pair;
  bool parallel = true;
};

struct WitnessResult {
  DensityMatrix first;
  DensityMatrix second;
  double growth = 0.0;  // d_sys_out - d_sys_in (trace distance)
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::size_t best_restart = 0;
};

// Multi-restart hill climb for the input pair whose system trace distance
// grows the most over one step. Deterministic for a given config.
WitnessResult witness_search(const UnitaryDilation& d, const WitnessConfig& cfg);

// d_sys_out - d_sys_in for a pair of joint inputs.
double system_growth(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2);

}  // namespace divisi

#endif  // DIVISI_DIVISIBILITY_HPP_
