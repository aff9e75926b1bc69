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

#ifndef DIVISI_STATES_HPP_
#define DIVISI_STATES_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "divisi/matkernel.hpp"

// Qubit ordering: the leftmost symbol of a ket (|q0 q1 ... q_{N-1}>) is qubit 0
// and is the most significant bit of the row index.

namespace divisi {

// Acceptance bands for state validation. lenient() admits the slightly
// unnormalized inputs produced by three-decimal truncated constants.
struct StateTolerance {
  double hermitian = 1e-9;
  double trace = 1e-9;
  double psd = 1e-9;

  static constexpr StateTolerance strict() { return {}; }
  static constexpr StateTolerance lenient() { return {1e-9, 2e-3, 1e-9}; }

  // Loosest of the two, per field.
  static StateTolerance widest(const StateTolerance& a, const StateTolerance& b);
  friend bool operator==(const StateTolerance&, const StateTolerance&) = default;
};

std::size_t qubit_dim(std::size_t qubits);

class PureState {
 public:
  // Throws ValidationError if | ||amps||^2 - 1 | > norm_tol, DimensionError if
  // the length is not a power of two >= 2.
  static PureState from_amplitudes(std::vector<Complex> amps, double norm_tol = 1e-9);
  // Computational basis ket from a bit string such as "100".
  static PureState basis(std::string_view bits);

  std::size_t qubits() const noexcept { return qubits_; }
  std::span<const Complex> amps() const noexcept { return amps_; }
  double norm_tolerance() const noexcept { return norm_tol_; }

 private:
  PureState(std::size_t qubits, std::vector<Complex> amps, double norm_tol)
      : qubits_(qubits), amps_(std::move(amps)), norm_tol_(norm_tol) {}
  std::size_t qubits_;
  std::vector<Complex> amps_;
  double norm_tol_;
};

// Hermitian, unit-trace, positive semidefinite matrix on N qubits.
class DensityMatrix {
 public:
  static DensityMatrix validated(ComplexMatrix mat,
                                 StateTolerance tol = StateTolerance::strict());

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& mat() const noexcept { return mat_; }
  const StateTolerance& tolerance() const noexcept { return tol_; }

 private:
  DensityMatrix(std::size_t qubits, ComplexMatrix mat, StateTolerance tol)
      : qubits_(qubits), mat_(std::move(mat)), tol_(tol) {}
  std::size_t qubits_;
  ComplexMatrix mat_;
  StateTolerance tol_;
};

enum class Subsystem { System, Environment };

// Disjoint system / environment qubit lists that together cover 0..N-1.
class Bipartition {
 public:
  static Bipartition make(std::vector<std::size_t> system, std::vector<std::size_t> environment);
  // First `system_qubits` qubits are S, the next `environment_qubits` are E.
  static Bipartition contiguous(std::size_t system_qubits, std::size_t environment_qubits);
  // S = given qubits in order, E = the remaining ones ascending.
  static Bipartition from_system(std::vector<std::size_t> system, std::size_t total_qubits);

  const std::vector<std::size_t>& system() const noexcept { return system_; }
  const std::vector<std::size_t>& environment() const noexcept { return environment_; }
  const std::vector<std::size_t>& side(Subsystem s) const noexcept {
    return s == Subsystem::System ? system_ : environment_;
  }
  std::size_t total_qubits() const noexcept { return system_.size() + environment_.size(); }
  // True when S is exactly 0..Ns-1 and E is Ns..N-1.
  bool is_contiguous() const noexcept;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  Bipartition(std::vector<std::size_t> s, std::vector<std::size_t> e)
      : system_(std::move(s)), environment_(std::move(e)) {}
  std::vector<std::size_t> system_;
  std::vector<std::size_t> environment_;
};

DensityMatrix density_from_pure(const PureState& p);

// Offset into the full 2^N register contributed by each local basis index of
// the qubit list `qs`; a full index is the OR of one offset per disjoint list.
std::vector<std::size_t> register_offsets(std::size_t total_qubits,
                                          std::span<const std::size_t> qs);

// Trace out every qubit not listed in `keep`; the result is ordered as `keep`.
// Works on any square 2^N matrix (differences of states included).
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m, std::size_t qubits,
                                   std::span<const std::size_t> keep);

DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& split, Subsystem keep);

DensityMatrix maximally_mixed(std::size_t qubits);

// rho_a ⊗ rho_b
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Tr[rho^2]
double purity(const DensityMatrix& rho);

}  // namespace divisi

#endif  // DIVISI_STATES_HPP_
