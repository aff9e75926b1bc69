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

#include <algorithm>
#include <future>

#include "divisi/divisibility.hpp"
#include "divisi/random.hpp"

namespace divisi {
namespace {

constexpr std::size_t kFailuresPerHalving = 8;
constexpr std::size_t kFailuresPerRestart = 64;
constexpr double kMinStep = 1e-7;

struct RestartOutcome {
  double growth = 0.0;
  std::vector<Complex> first;
  std::vector<Complex> second;
  std::size_t iterations = 0;
};

// Evaluates system growth for candidate amplitude pairs. Works on the
// difference of the two joint inputs, which the step maps linearly.
class GrowthObjective {
 public:
  GrowthObjective(const UnitaryDilation& d, bool correlated)
      : d_(d), correlated_(correlated), u_dag_(adjoint(d.u())) {}

  std::size_t search_dim() const {
    return qubit_dim(correlated_ ? d_.total_qubits() : d_.system_qubits());
  }

  ComplexMatrix joint_input(const std::vector<Complex>& amps) const {
    ComplexMatrix proj = outer(amps, amps);
    if (correlated_) return proj;
    return joint_from_product(proj);
  }

  double operator()(const std::vector<Complex>& a, const std::vector<Complex>& b) const {
    const ComplexMatrix delta = joint_input(a) - joint_input(b);
    const ComplexMatrix delta_out = d_.u() * delta * u_dag_;
    const std::size_t n = d_.total_qubits();
    const auto& sys = d_.split().system();
    return half_trace_norm(partial_trace_matrix(delta_out, n, sys)) -
           half_trace_norm(partial_trace_matrix(delta, n, sys));
  }

 private:
  // sigma_S ⊗ env_init laid out over the bipartition's qubit positions.
  ComplexMatrix joint_from_product(const ComplexMatrix& sigma) const {
    const std::size_t n = d_.total_qubits();
    const auto s_off = register_offsets(n, d_.split().system());
    const auto e_off = register_offsets(n, d_.split().environment());
    const ComplexMatrix& env = d_.env_init().mat();
    ComplexMatrix out(qubit_dim(n), qubit_dim(n));
    for (std::size_t si = 0; si < s_off.size(); ++si)
      for (std::size_t sj = 0; sj < s_off.size(); ++sj)
        for (std::size_t ei = 0; ei < e_off.size(); ++ei)
          for (std::size_t ej = 0; ej < e_off.size(); ++ej)
            out(s_off[si] | e_off[ei], s_off[sj] | e_off[ej]) = sigma(si, sj) * env(ei, ej);
    return out;
  }

  const UnitaryDilation& d_;
  bool correlated_;
  ComplexMatrix u_dag_;
};

void normalize(std::vector<Complex>& v) {
  double norm = 0.0;
  for (const Complex& z : v) norm += std::norm(z);
  norm = std::sqrt(norm);
  for (Complex& z : v) z /= norm;
}

RestartOutcome climb(const GrowthObjective& objective, const WitnessConfig& cfg,
                     std::size_t restart) {
  Rng rng(cfg.seed + restart);
  const std::size_t dim = objective.search_dim();

  RestartOutcome best;
  if (restart == 0 && cfg.initial_pair) {
    best.first = cfg.initial_pair->first;
    best.second = cfg.initial_pair->second;
    if (best.first.size() != dim || best.second.size() != dim) {
      throw DimensionError("witness_search: initial pair has the wrong dimension");
    }
    normalize(best.first);
    normalize(best.second);
  } else {
    best.first = random_unit_vector(dim, rng);
    best.second = random_unit_vector(dim, rng);
  }
  best.growth = objective(best.first, best.second);

  double step = cfg.step;
  std::size_t failures = 0;
  for (std::size_t it = 0; it < cfg.iters; ++it) {
    ++best.iterations;
    std::vector<Complex> a = best.first;
    std::vector<Complex> b = best.second;
    std::vector<Complex>& target = rng.index(2) == 0 ? a : b;
    target[rng.index(dim)] += step * rng.complex_normal();
    normalize(target);

    const double g = objective(a, b);
    if (g > best.growth) {
      best.growth = g;
      best.first = std::move(a);
      best.second = std::move(b);
      failures = 0;
      continue;
    }
    ++failures;
    if (failures % kFailuresPerHalving == 0) step = std::max(step * 0.5, kMinStep);
    if (failures >= kFailuresPerRestart) break;
  }
  return best;
}

}  // namespace

double system_growth(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2) {
  const StepReport r = probe_step(d, s1, s2, Metric::TraceNorm);
  return r.d_sys_out - r.d_sys_in;
}

WitnessResult witness_search(const UnitaryDilation& d, const WitnessConfig& cfg) {
  const GrowthObjective objective(d, cfg.correlated);
  const std::size_t restarts = std::max<std::size_t>(cfg.restarts, 1);

  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(restarts);
  if (cfg.parallel && restarts > 1) {
    std::vector<std::future<RestartOutcome>> jobs;
    for (std::size_t r = 0; r < restarts; ++r) {
      jobs.push_back(std::async(std::launch::async, [&, r] { return climb(objective, cfg, r); }));
    }
    for (auto& job : jobs) outcomes.push_back(job.get());
  } else {
    for (std::size_t r = 0; r < restarts; ++r) outcomes.push_back(climb(objective, cfg, r));
  }

  std::size_t best = 0;
  std::size_t iterations = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    iterations += outcomes[r].iterations;
    if (outcomes[r].growth > outcomes[best].growth) best = r;
  }

  const RestartOutcome& win = outcomes[best];
  const StateTolerance tol = StateTolerance::widest(StateTolerance::strict(),
                                                    d.env_init().tolerance());
  auto to_state = [&](const std::vector<Complex>& amps) {
    ComplexMatrix m = objective.joint_input(amps);
    return DensityMatrix::validated(0.5 * (m + adjoint(m)), tol);
  };
  return WitnessResult{to_state(win.first), to_state(win.second), win.growth, iterations,
                       cfg.seed, best};
}

}  // namespace divisi
