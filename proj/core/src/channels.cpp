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

#include "divisi/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace divisi {
namespace {

constexpr double kDropWeight = 1e-12;
constexpr double kDropOperator = 1e-13;

// States produced by an approximately unitary map inherit a trace band wide
// enough for the map's deviation.
StateTolerance widen_for(const StateTolerance& tol, double map_tol) {
  if (map_tol <= kDefaultUnitarityTol) return tol;
  return StateTolerance::widest(tol, StateTolerance::lenient());
}

}  // namespace

UnitaryDilation UnitaryDilation::make(ComplexMatrix u, Bipartition split, DensityMatrix env_init,
                                      double unitarity_tol) {
  const std::size_t dim = qubit_dim(split.total_qubits());
  if (!u.is_square() || u.rows() != dim) {
    throw DimensionError("dilation unitary " + u.shape() + " does not act on " +
                         std::to_string(split.total_qubits()) + " qubits");
  }
  if (env_init.qubits() != split.environment().size()) {
    throw DimensionError("environment state has " + std::to_string(env_init.qubits()) +
                         " qubits, bipartition has " +
                         std::to_string(split.environment().size()));
  }
  const double dev = divisi::unitarity_deviation(u);
  if (dev > unitarity_tol) {
    std::ostringstream msg;
    msg << "matrix is not unitary: unitarity deviation max|U^dag U - I| = " << dev
        << " exceeds " << unitarity_tol;
    throw NonUnitaryError(msg.str(), dev);
  }

  UnitaryDilation d;
  d.u_ = std::move(u);
  d.split_ = std::move(split);
  d.deviation_ = dev;
  d.unitarity_tol_ = unitarity_tol;

  const HermitianEigen eig = hermitian_eigh(env_init.mat(), env_init.tolerance().hermitian);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < eig.values.size(); ++k)
    if (eig.values[k] > kDropWeight) kept.push_back(k);
  d.env_vectors_ = ComplexMatrix(env_init.dim(), kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    d.env_weights_.push_back(eig.values[kept[c]]);
    for (std::size_t i = 0; i < env_init.dim(); ++i) d.env_vectors_(i, c) = eig.vectors(i, kept[c]);
  }
  d.env_init_ = std::move(env_init);
  return d;
}

KrausChannel KrausChannel::make(std::size_t in_qubits, std::size_t out_qubits,
                                std::vector<ComplexMatrix> ops, double tol) {
  if (ops.empty()) throw ValidationError("Kraus channel needs at least one operator");
  const std::size_t din = qubit_dim(in_qubits);
  const std::size_t dout = qubit_dim(out_qubits);
  ComplexMatrix sum(din, din);
  for (const ComplexMatrix& k : ops) {
    if (k.rows() != dout || k.cols() != din) {
      throw DimensionError("Kraus operator " + k.shape() + " does not map " +
                           std::to_string(in_qubits) + " to " + std::to_string(out_qubits) +
                           " qubits");
    }
    sum += adjoint(k) * k;
  }
  const double dev = max_abs_diff(sum, ComplexMatrix::identity(din));
  if (dev > tol) {
    std::ostringstream msg;
    msg << "Kraus operators are not trace preserving: max|sum K^dag K - I| = " << dev;
    throw ValidationError(msg.str());
  }
  KrausChannel ch;
  ch.in_qubits_ = in_qubits;
  ch.out_qubits_ = out_qubits;
  ch.ops_ = std::move(ops);
  ch.completeness_deviation_ = dev;
  ch.tol_ = tol;
  return ch;
}

MixedUnitarySpec MixedUnitarySpec::make(std::vector<double> weights,
                                        std::vector<ComplexMatrix> unitaries) {
  if (weights.empty() || weights.size() != unitaries.size()) {
    throw ValidationError("mixed-unitary spec needs one weight per unitary");
  }
  for (double p : weights) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("mixed-unitary weight " + std::to_string(p) + " is outside [0,1]");
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "mixed-unitary weights sum to " << total << ", not 1";
    throw ValidationError(msg.str());
  }
  const std::size_t dim = unitaries.front().rows();
  for (const ComplexMatrix& u : unitaries) {
    if (!u.is_square() || u.rows() != dim) {
      throw DimensionError("mixed-unitary terms must share one square shape");
    }
    const double dev = unitarity_deviation(u);
    if (dev > kDefaultUnitarityTol) {
      throw NonUnitaryError("mixed-unitary term is not unitary", dev);
    }
  }
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionError("mixed-unitary terms must act on whole qubits");
  }
  MixedUnitarySpec spec;
  spec.weights_ = std::move(weights);
  spec.unitaries_ = std::move(unitaries);
  return spec;
}

std::size_t MixedUnitarySpec::qubits() const noexcept {
  std::size_t n = 0;
  while (qubit_dim(n) < unitaries_.front().rows()) ++n;
  return n;
}

DensityMatrix joint_evolve(const UnitaryDilation& d, const DensityMatrix& sigma_se) {
  if (sigma_se.qubits() != d.total_qubits()) {
    throw DimensionError("joint_evolve: state has " + std::to_string(sigma_se.qubits()) +
                         " qubits, dilation acts on " + std::to_string(d.total_qubits()));
  }
  ComplexMatrix out = d.u() * sigma_se.mat() * adjoint(d.u());
  out = 0.5 * (out + adjoint(out));
  return DensityMatrix::validated(std::move(out),
                                  widen_for(sigma_se.tolerance(), d.unitarity_tolerance()));
}

KrausChannel dilation_to_kraus(const UnitaryDilation& d) {
  const Bipartition& split = d.split();
  const std::size_t n = split.total_qubits();
  const auto s_off = register_offsets(n, split.system());
  const auto e_off = register_offsets(n, split.environment());
  const std::size_t ds = s_off.size();
  const std::size_t de = e_off.size();
  const ComplexMatrix& u = d.u();

  std::vector<ComplexMatrix> ops;
  for (std::size_t j = 0; j < d.env_weights().size(); ++j) {
    const double amp = std::sqrt(d.env_weights()[j]);
    for (std::size_t i = 0; i < de; ++i) {
      ComplexMatrix k(ds, ds);
      for (std::size_t so = 0; so < ds; ++so) {
        for (std::size_t si = 0; si < ds; ++si) {
          Complex acc{};
          for (std::size_t e = 0; e < de; ++e) {
            acc += u(s_off[so] | e_off[i], s_off[si] | e_off[e]) * d.env_vectors()(e, j);
          }
          k(so, si) = amp * acc;
        }
      }
      if (frobenius_norm(k) > kDropOperator) ops.push_back(std::move(k));
    }
  }
  if (ops.empty()) ops.emplace_back(ds, ds);  // completeness check reports the failure
  return KrausChannel::make(split.system().size(), split.system().size(), std::move(ops),
                            std::max(1e-9, d.unitarity_tolerance()));
}

DensityMatrix apply_channel(const KrausChannel& k, const DensityMatrix& sigma) {
  if (sigma.qubits() != k.in_qubits()) {
    throw DimensionError("apply_channel: state has " + std::to_string(sigma.qubits()) +
                         " qubits, channel expects " + std::to_string(k.in_qubits()));
  }
  ComplexMatrix out(qubit_dim(k.out_qubits()), qubit_dim(k.out_qubits()));
  for (const ComplexMatrix& op : k.ops()) out += op * sigma.mat() * adjoint(op);
  out = 0.5 * (out + adjoint(out));
  return DensityMatrix::validated(std::move(out), widen_for(sigma.tolerance(), k.tolerance()));
}

UnitalityReport is_unital(const KrausChannel& k, double tol) {
  if (k.in_qubits() != k.out_qubits()) {
    throw DimensionError("unitality needs a channel with equal input and output size");
  }
  const std::size_t d = qubit_dim(k.out_qubits());
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& op : k.ops()) sum += op * adjoint(op);
  UnitalityReport r;
  r.deviation = max_abs_diff(sum, ComplexMatrix::identity(d));
  r.unital = r.deviation <= tol;
  return r;
}

ComplexMatrix choi_matrix(const KrausChannel& k) {
  const std::size_t din = qubit_dim(k.in_qubits());
  const std::size_t dout = qubit_dim(k.out_qubits());
  ComplexMatrix choi(din * dout, din * dout);
  // E(|m><n|) = sum_i K_i[:,m] K_i[:,n]^dag
  for (std::size_t m = 0; m < din; ++m) {
    for (std::size_t n = 0; n < din; ++n) {
      for (const ComplexMatrix& op : k.ops()) {
        for (std::size_t a = 0; a < dout; ++a) {
          for (std::size_t b = 0; b < dout; ++b) {
            choi(m * dout + a, n * dout + b) += op(a, m) * std::conj(op(b, n));
          }
        }
      }
    }
  }
  return choi;
}

KrausChannel mixed_unitary_channel(const MixedUnitarySpec& spec) {
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < spec.terms(); ++i) {
    if (spec.weights()[i] <= 0.0) continue;
    ops.push_back(std::sqrt(spec.weights()[i]) * spec.unitaries()[i]);
  }
  return KrausChannel::make(spec.qubits(), spec.qubits(), std::move(ops));
}

UnitaryDilation mixed_unitary_dilation(const MixedUnitarySpec& spec) {
  const std::size_t ns = spec.qubits();
  std::size_t ne = 1;
  while (qubit_dim(ne) < spec.terms()) ++ne;
  const std::size_t de = qubit_dim(ne);

  ComplexMatrix u(qubit_dim(ns + ne), qubit_dim(ns + ne));
  std::vector<double> env_diag(de, 0.0);
  for (std::size_t i = 0; i < de; ++i) {
    ComplexMatrix proj(de, de);
    proj(i, i) = 1.0;
    const ComplexMatrix& term =
        i < spec.terms() ? spec.unitaries()[i] : ComplexMatrix::identity(qubit_dim(ns));
    u += kron(term, proj);
    if (i < spec.terms()) env_diag[i] = spec.weights()[i];
  }
  return UnitaryDilation::make(std::move(u), Bipartition::contiguous(ns, ne),
                               DensityMatrix::validated(ComplexMatrix::diagonal(env_diag)),
                               1e-10);
}

ComplexMatrix repair_polar(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("polar repair needs a square matrix");
  const HermitianEigen eig = hermitian_eigh(adjoint(u) * u, 1e-6);
  const std::size_t n = u.rows();
  ComplexMatrix inv_sqrt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] <= 1e-14) {
      throw ValidationError("polar repair: matrix is singular");
    }
    const double w = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        inv_sqrt(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return u * inv_sqrt;
}

}  // namespace divisi
