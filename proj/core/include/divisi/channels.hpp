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

#ifndef DIVISI_CHANNELS_HPP_
#define DIVISI_CHANNELS_HPP_

#include <cstddef>
#include <vector>

#include "divisi/matkernel.hpp"
#include "divisi/states.hpp"

namespace divisi {

inline constexpr double kDefaultUnitarityTol = 1e-9;

// Global unitary on S+E plus the environment's initial state. The
// environment state is kept in spectral form (weights p_k, eigenvectors
// |a_k>) with weights below 1e-12 dropped.
class UnitaryDilation {
 public:
  // Throws NonUnitaryError when max|U^dag U - I| exceeds unitarity_tol.
  static UnitaryDilation make(ComplexMatrix u, Bipartition split, DensityMatrix env_init,
                              double unitarity_tol = kDefaultUnitarityTol);

  const ComplexMatrix& u() const noexcept { return u_; }
  const Bipartition& split() const noexcept { return split_; }
  const DensityMatrix& env_init() const noexcept { return env_init_; }
  std::size_t system_qubits() const noexcept { return split_.system().size(); }
  std::size_t environment_qubits() const noexcept { return split_.environment().size(); }
  std::size_t total_qubits() const noexcept { return split_.total_qubits(); }

  const std::vector<double>& env_weights() const noexcept { return env_weights_; }
  // Column k is |a_k>, paired with env_weights()[k].
  const ComplexMatrix& env_vectors() const noexcept { return env_vectors_; }

  double unitarity_deviation() const noexcept { return deviation_; }
  double unitarity_tolerance() const noexcept { return unitarity_tol_; }
  // True when the dilation was accepted at the default strict tolerance.
  bool is_strict() const noexcept { return unitarity_tol_ <= kDefaultUnitarityTol; }

 private:
  UnitaryDilation() = default;
  ComplexMatrix u_;
  Bipartition split_ = Bipartition::contiguous(1, 1);
  DensityMatrix env_init_ = maximally_mixed(1);
  std::vector<double> env_weights_;
  ComplexMatrix env_vectors_;
  double deviation_ = 0.0;
  double unitarity_tol_ = kDefaultUnitarityTol;
};

// Kraus operators K_i : C^(2^in) -> C^(2^out) with sum K_i^dag K_i = I.
class KrausChannel {
 public:
  static KrausChannel make(std::size_t in_qubits, std::size_t out_qubits,
                           std::vector<ComplexMatrix> ops, double tol = 1e-9);

  std::size_t in_qubits() const noexcept { return in_qubits_; }
  std::size_t out_qubits() const noexcept { return out_qubits_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  double completeness_deviation() const noexcept { return completeness_deviation_; }
  double tolerance() const noexcept { return tol_; }

 private:
  KrausChannel() = default;
  std::size_t in_qubits_ = 0;
  std::size_t out_qubits_ = 0;
  std::vector<ComplexMatrix> ops_;
  double completeness_deviation_ = 0.0;
  double tol_ = 1e-9;
};

// Convex combination of unitary conjugations, K_i = sqrt(p_i) U_i.
class MixedUnitarySpec {
 public:
  static MixedUnitarySpec make(std::vector<double> weights, std::vector<ComplexMatrix> unitaries);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<ComplexMatrix>& unitaries() const noexcept { return unitaries_; }
  std::size_t qubits() const noexcept;
  std::size_t terms() const noexcept { return weights_.size(); }

 private:
  MixedUnitarySpec() = default;
  std::vector<double> weights_;
  std::vector<ComplexMatrix> unitaries_;
};

// U sigma U^dag
DensityMatrix joint_evolve(const UnitaryDilation& d, const DensityMatrix& sigma_se);

// K_ij = sqrt(p_j) (I ⊗ <e_i|) U (I ⊗ |a_j>), {e_i} the computational basis of E.
// Operators with Frobenius norm below 1e-13 are dropped.
KrausChannel dilation_to_kraus(const UnitaryDilation& d);

DensityMatrix apply_channel(const KrausChannel& k, const DensityMatrix& sigma);

struct UnitalityReport {
  bool unital = false;
  double deviation = 0.0;  // max|sum K K^dag - I|
};

UnitalityReport is_unital(const KrausChannel& k, double tol = 1e-9);

// sum_mn |m><n| ⊗ E(|m><n|)
ComplexMatrix choi_matrix(const KrausChannel& k);

// K_i = sqrt(p_i) U_i for the nonzero weights.
KrausChannel mixed_unitary_channel(const MixedUnitarySpec& spec);

// U = sum_i U_i ⊗ |i><i| on S ⊗ E with env_init = sum_i p_i |i><i|. E has
// max(1, ceil(log2 m)) qubits; unused slots carry identity at weight 0.
UnitaryDilation mixed_unitary_dilation(const MixedUnitarySpec& spec);

// Nearest unitary in Frobenius norm, U (U^dag U)^{-1/2}.
ComplexMatrix repair_polar(const ComplexMatrix& u);

}  // namespace divisi

#endif  // DIVISI_CHANNELS_HPP_
