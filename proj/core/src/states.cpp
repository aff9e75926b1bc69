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

#include "divisi/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace divisi {
namespace {

std::size_t log2_exact(std::size_t dim, const char* what) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(dim) +
                         " is not a power of two >= 2");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

}  // namespace

StateTolerance StateTolerance::widest(const StateTolerance& a, const StateTolerance& b) {
  return {std::max(a.hermitian, b.hermitian), std::max(a.trace, b.trace),
          std::max(a.psd, b.psd)};
}

std::size_t qubit_dim(std::size_t qubits) { return std::size_t{1} << qubits; }

PureState PureState::from_amplitudes(std::vector<Complex> amps, double norm_tol) {
  const std::size_t n = log2_exact(amps.size(), "pure state");
  double norm_sq = 0.0;
  for (const Complex& z : amps) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("pure state amplitude is not finite");
    }
    norm_sq += std::norm(z);
  }
  if (std::abs(norm_sq - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "pure state norm^2 " << norm_sq << " deviates from 1 by more than " << norm_tol;
    throw ValidationError(msg.str());
  }
  return PureState(n, std::move(amps), norm_tol);
}

PureState PureState::basis(std::string_view bits) {
  if (bits.empty()) throw DimensionError("basis state needs at least one qubit");
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw ValidationError("basis label '" + std::string(bits) + "' is not a bit string");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  std::vector<Complex> amps(qubit_dim(bits.size()));
  amps[index] = 1.0;
  return PureState(bits.size(), std::move(amps), 1e-9);
}

DensityMatrix DensityMatrix::validated(ComplexMatrix mat, StateTolerance tol) {
  if (!mat.is_square()) throw DimensionError("density matrix " + mat.shape() + " is not square");
  const std::size_t n = log2_exact(mat.rows(), "density matrix");

  const double asym = max_asymmetry(mat);
  if (asym > tol.hermitian) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max asymmetry " << asym;
    throw NonHermitianError(msg.str(), asym);
  }
  const double tr = trace(mat).real();
  if (std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " deviates from 1 by more than " << tol.trace;
    throw ValidationError(msg.str());
  }
  const double min_eig = hermitian_eigvals(mat, tol.hermitian).front();
  if (min_eig < -tol.psd) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: min eigenvalue " << min_eig;
    throw ValidationError(msg.str());
  }
  return DensityMatrix(n, std::move(mat), tol);
}

Bipartition Bipartition::make(std::vector<std::size_t> system,
                              std::vector<std::size_t> environment) {
  if (system.empty() || environment.empty()) {
    throw ValidationError("bipartition needs at least one system and one environment qubit");
  }
  const std::size_t n = system.size() + environment.size();
  std::vector<bool> seen(n, false);
  for (const auto* side : {&system, &environment}) {
    for (std::size_t q : *side) {
      if (q >= n) {
        throw ValidationError("bipartition qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n) + " qubits");
      }
      if (seen[q]) {
        throw ValidationError("bipartition qubit index " + std::to_string(q) +
                              " appears more than once");
      }
      seen[q] = true;
    }
  }
  return Bipartition(std::move(system), std::move(environment));
}

Bipartition Bipartition::contiguous(std::size_t system_qubits, std::size_t environment_qubits) {
  std::vector<std::size_t> s(system_qubits);
  std::vector<std::size_t> e(environment_qubits);
  for (std::size_t i = 0; i < system_qubits; ++i) s[i] = i;
  for (std::size_t i = 0; i < environment_qubits; ++i) e[i] = system_qubits + i;
  return make(std::move(s), std::move(e));
}

Bipartition Bipartition::from_system(std::vector<std::size_t> system, std::size_t total_qubits) {
  std::vector<std::size_t> e;
  for (std::size_t q = 0; q < total_qubits; ++q) {
    if (std::find(system.begin(), system.end(), q) == system.end()) e.push_back(q);
  }
  if (system.size() + e.size() != total_qubits) {
    throw ValidationError("system qubit list is inconsistent with " +
                          std::to_string(total_qubits) + " qubits");
  }
  return make(std::move(system), std::move(e));
}

bool Bipartition::is_contiguous() const noexcept {
  for (std::size_t i = 0; i < system_.size(); ++i)
    if (system_[i] != i) return false;
  for (std::size_t i = 0; i < environment_.size(); ++i)
    if (environment_[i] != system_.size() + i) return false;
  return true;
}

DensityMatrix density_from_pure(const PureState& p) {
  StateTolerance tol;
  tol.trace = std::max(tol.trace, p.norm_tolerance());
  return DensityMatrix::validated(outer(p.amps(), p.amps()), tol);
}

std::vector<std::size_t> register_offsets(std::size_t total_qubits,
                                          std::span<const std::size_t> qs) {
  std::vector<std::size_t> off(qubit_dim(qs.size()), 0);
  for (std::size_t local = 0; local < off.size(); ++local) {
    for (std::size_t k = 0; k < qs.size(); ++k) {
      if (local & (std::size_t{1} << (qs.size() - 1 - k))) {
        off[local] |= std::size_t{1} << (total_qubits - 1 - qs[k]);
      }
    }
  }
  return off;
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::size_t qubits,
                                   std::span<const std::size_t> keep) {
  if (!m.is_square() || m.rows() != qubit_dim(qubits)) {
    throw DimensionError("partial trace: matrix " + m.shape() + " does not act on " +
                         std::to_string(qubits) + " qubits");
  }
  std::vector<bool> kept(qubits, false);
  for (std::size_t q : keep) {
    if (q >= qubits || kept[q]) {
      throw ValidationError("partial trace: invalid kept qubit " + std::to_string(q));
    }
    kept[q] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < qubits; ++q)
    if (!kept[q]) traced.push_back(q);

  const auto keep_off = register_offsets(qubits, keep);
  const auto trace_off = register_offsets(qubits, traced);

  ComplexMatrix out(keep_off.size(), keep_off.size());
  for (std::size_t i = 0; i < keep_off.size(); ++i) {
    for (std::size_t j = 0; j < keep_off.size(); ++j) {
      Complex s{};
      for (std::size_t t : trace_off) s += m(keep_off[i] | t, keep_off[j] | t);
      out(i, j) = s;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& split, Subsystem keep) {
  if (split.total_qubits() != rho.qubits()) {
    throw DimensionError("partial trace: bipartition covers " +
                         std::to_string(split.total_qubits()) + " qubits, state has " +
                         std::to_string(rho.qubits()));
  }
  return DensityMatrix::validated(
      partial_trace_matrix(rho.mat(), rho.qubits(), split.side(keep)), rho.tolerance());
}

DensityMatrix maximally_mixed(std::size_t qubits) {
  if (qubits < 1) throw ValidationError("maximally mixed state needs at least one qubit");
  const std::size_t d = qubit_dim(qubits);
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= 1.0 / static_cast<double>(d);
  return DensityMatrix::validated(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::validated(kron(a.mat(), b.mat()),
                                  StateTolerance::widest(a.tolerance(), b.tolerance()));
}

double purity(const DensityMatrix& rho) {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const Complex& z : rho.mat().entries()) s += std::norm(z);
  return s;
}

}  // namespace divisi
