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

#include "divisi/divisibility.hpp"

#include <cmath>
#include <sstream>

namespace divisi {
namespace {

constexpr double kBoundSlackTol = 1e-12;

void require_same_dims(const DensityMatrix& a, const DensityMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": states act on " + std::to_string(a.qubits()) +
                         " and " + std::to_string(b.qubits()) + " qubits");
  }
}

BoundCheck upper_bound(double lhs, double rhs) {
  const double slack = rhs - lhs;
  return {slack >= -kBoundSlackTol, slack};
}

}  // namespace

std::string_view to_string(Metric m) {
  return m == Metric::TraceNorm ? "trace" : "hs";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::PDivisibleStep ? "PDivisibleStep" : "PIndivisibleStep";
}

double half_trace_norm(const ComplexMatrix& hermitian_delta) {
  double s = 0.0;
  for (double lambda : hermitian_eigvals(hermitian_delta)) s += std::abs(lambda);
  return 0.5 * s;
}

double half_hs_norm_sq(const ComplexMatrix& delta) {
  // Tr[D^dag D] is the squared Frobenius norm.
  double s = 0.0;
  for (const Complex& z : delta.entries()) s += std::norm(z);
  return 0.5 * s;
}

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
  require_same_dims(r1, r2, "trace_distance");
  return half_trace_norm(r1.mat() - r2.mat());
}

double hs_distance_sq(const DensityMatrix& r1, const DensityMatrix& r2) {
  require_same_dims(r1, r2, "hs_distance_sq");
  return half_hs_norm_sq(r1.mat() - r2.mat());
}

double distance(Metric metric, const DensityMatrix& r1, const DensityMatrix& r2) {
  return metric == Metric::TraceNorm ? trace_distance(r1, r2) : hs_distance_sq(r1, r2);
}

Verdict step_verdict(double d_in, double d_out, double tolerance) {
  return d_out > d_in + tolerance ? Verdict::PIndivisibleStep : Verdict::PDivisibleStep;
}

StepReport probe_step(const UnitaryDilation& d, const DensityMatrix& s1, const DensityMatrix& s2,
                      Metric metric, double tolerance) {
  require_same_dims(s1, s2, "probe_step");
  const DensityMatrix r1 = joint_evolve(d, s1);
  const DensityMatrix r2 = joint_evolve(d, s2);
  const Bipartition& split = d.split();

  StepReport rep;
  rep.metric = metric;
  rep.tolerance = tolerance;
  rep.d_full_in = distance(metric, s1, s2);
  rep.d_full_out = distance(metric, r1, r2);
  rep.d_sys_in = distance(metric, partial_trace(s1, split, Subsystem::System),
                          partial_trace(s2, split, Subsystem::System));
  rep.d_sys_out = distance(metric, partial_trace(r1, split, Subsystem::System),
                           partial_trace(r2, split, Subsystem::System));
  rep.d_env_in = distance(metric, partial_trace(s1, split, Subsystem::Environment),
                          partial_trace(s2, split, Subsystem::Environment));
  rep.d_env_out = distance(metric, partial_trace(r1, split, Subsystem::Environment),
                           partial_trace(r2, split, Subsystem::Environment));
  rep.sys_verdict = step_verdict(rep.d_sys_in, rep.d_sys_out, tolerance);
  rep.env_verdict = step_verdict(rep.d_env_in, rep.d_env_out, tolerance);
  rep.full_verdict = step_verdict(rep.d_full_in, rep.d_full_out, tolerance);
  return rep;
}

Theorem2Report theorem2_report(const UnitaryDilation& d, const DensityMatrix& s1,
                               const DensityMatrix& s2) {
  require_same_dims(s1, s2, "theorem2_report");
  const std::size_t n = d.total_qubits();
  if (s1.qubits() != n) {
    throw DimensionError("theorem2_report: states do not act on the dilation's " +
                         std::to_string(n) + " qubits");
  }
  const auto& sys = d.split().system();
  const auto& env = d.split().environment();
  const ComplexMatrix delta_in = s1.mat() - s2.mat();
  const ComplexMatrix delta_out = joint_evolve(d, s1).mat() - joint_evolve(d, s2).mat();

  Theorem2Report r;
  r.gamma = half_hs_norm_sq(delta_in);
  r.gamma_out = half_hs_norm_sq(delta_out);
  if (d.is_strict() && std::abs(r.gamma - r.gamma_out) > 1e-10) {
    std::ostringstream msg;
    msg << "gamma is not invariant under the dilation: " << r.gamma << " vs " << r.gamma_out;
    throw ValidationError(msg.str());
  }
  r.alpha_s = half_hs_norm_sq(partial_trace_matrix(delta_in, n, sys));
  r.alpha_e = half_hs_norm_sq(partial_trace_matrix(delta_in, n, env));
  r.beta_s = half_hs_norm_sq(partial_trace_matrix(delta_out, n, sys));
  r.beta_e = half_hs_norm_sq(partial_trace_matrix(delta_out, n, env));
  r.t_se = r.gamma_out;
  r.t_s = r.beta_s;
  r.t_e = r.beta_e;
  r.eq6_lhs = r.beta_s * r.beta_e - r.alpha_s * r.alpha_e;
  r.eq7_lhs = (r.beta_s - r.alpha_s) * r.beta_e + (r.beta_e - r.alpha_e) * r.alpha_s;
  r.eq8_lhs = (r.beta_s - r.alpha_s) * r.alpha_e + (r.beta_e - r.alpha_e) * r.beta_s;
  r.product_bound_in = upper_bound(r.alpha_s * r.alpha_e, r.gamma);
  r.product_bound_out = upper_bound(r.beta_s * r.beta_e, r.gamma);
  r.ts_te_bound = upper_bound(r.t_s * r.t_e, r.t_se);
  r.eq6 = upper_bound(r.eq6_lhs, 0.0);
  r.eq7 = upper_bound(r.eq7_lhs, 0.0);
  return r;
}

double contraction_check(const KrausChannel& k, const DensityMatrix& r1, const DensityMatrix& r2) {
  if (k.completeness_deviation() > k.tolerance()) {
    throw ValidationError("contraction_check: channel is not trace preserving");
  }
  return trace_distance(r1, r2) - trace_distance(apply_channel(k, r1), apply_channel(k, r2));
}

PurityIdentity theorem1_identity(const MixedUnitarySpec& spec, const DensityMatrix& sigma) {
  if (sigma.qubits() != spec.qubits()) {
    throw DimensionError("theorem1_identity: state and unitaries act on different qubit counts");
  }
  const UnitaryDilation d = mixed_unitary_dilation(spec);
  const std::size_t de = qubit_dim(d.environment_qubits());
  const std::size_t ds = qubit_dim(spec.qubits());
  const ComplexMatrix joint_in = kron(sigma.mat(), d.env_init().mat());

  // A_i = (U_i ⊗ Pi_i)(sigma ⊗ sum_k p_k Pi_k)(U_i ⊗ Pi_i)^dag
  std::vector<ComplexMatrix> terms;
  for (std::size_t i = 0; i < de; ++i) {
    ComplexMatrix proj(de, de);
    proj(i, i) = 1.0;
    const ComplexMatrix& ui =
        i < spec.terms() ? spec.unitaries()[i] : ComplexMatrix::identity(ds);
    const ComplexMatrix block = kron(ui, proj);
    terms.push_back(block * joint_in * adjoint(block));
  }
  PurityIdentity out;
  for (const ComplexMatrix& a : terms) {
    for (const ComplexMatrix& b : terms) out.lhs += trace(a * b).real();
  }
  double sum_sq = 0.0;
  for (double p : spec.weights()) sum_sq += p * p;
  out.rhs = sum_sq * purity(sigma);
  return out;
}

}  // namespace divisi
