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

#include <cmath>

#include "divisi/random.hpp"
#include "divisi/states.hpp"
#include "support/oracles.hpp"

namespace divisi {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

DensityMatrix random_state(std::size_t qubits, Rng& rng) {
  return DensityMatrix::validated(random_density_matrix(qubit_dim(qubits), qubit_dim(qubits), rng));
}

PureState bell() { return PureState::from_amplitudes({kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

PureState w_state() {
  std::vector<Complex> amps(8);
  amps[0b001] = amps[0b010] = amps[0b100] = kInvSqrt3;
  return PureState::from_amplitudes(amps);
}

TEST(States, DensityFromPureBasis) {
  const DensityMatrix rho = density_from_pure(PureState::basis("0"));
  EXPECT_EQ(rho.mat(), (ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));
  EXPECT_EQ(rho.qubits(), 1u);
}

TEST(States, DensityFromPureBellHasHalfCorners) {
  const DensityMatrix rho = density_from_pure(bell());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
      EXPECT_NEAR(std::abs(rho.mat()(i, j) - Complex(corner ? 0.5 : 0.0)), 0.0, 1e-15);
    }
  }
  EXPECT_NEAR(purity(rho), 1.0, 1e-10);
}

TEST(States, DensityFromPureWStatePattern) {
  const DensityMatrix rho = density_from_pure(w_state());
  const std::size_t support[] = {0b001, 0b010, 0b100};
  int thirds = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const bool in = std::count(std::begin(support), std::end(support), i) &&
                      std::count(std::begin(support), std::end(support), j);
      EXPECT_NEAR(rho.mat()(i, j).real(), in ? 1.0 / 3 : 0.0, 1e-15);
      thirds += in;
    }
  EXPECT_EQ(thirds, 9);
}

TEST(States, PureStateNormViolation) {
  EXPECT_THROW(PureState::from_amplitudes({1.0, 1.0}), ValidationError);
  EXPECT_THROW(PureState::from_amplitudes({1.0, 0.0, 0.0}), DimensionError);
  EXPECT_NO_THROW(PureState::from_amplitudes({0.707, 0.707}, 2e-3));
}

TEST(States, ValidationNamesViolatedInvariant) {
  auto message = [](ComplexMatrix m) {
    try {
      (void)DensityMatrix::validated(std::move(m));
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message({{0.5, 0.1}, {0.0, 0.5}}).find("Hermitian"), std::string::npos);
  EXPECT_NE(message({{0.6, 0.0}, {0.0, 0.6}}).find("trace"), std::string::npos);
  EXPECT_NE(message({{1.5, 0.0}, {0.0, -0.5}}).find("positive"), std::string::npos);
}

TEST(States, LenientToleranceAdmitsTruncatedTrace) {
  const ComplexMatrix m = {{0.499849, 0.0}, {0.0, 0.499849}};
  EXPECT_THROW((void)DensityMatrix::validated(m), ValidationError);
  EXPECT_NO_THROW((void)DensityMatrix::validated(m, StateTolerance::lenient()));
}

TEST(States, PartialTraceBellIsMaximallyMixed) {
  const DensityMatrix rho = density_from_pure(bell());
  const DensityMatrix sys = partial_trace(rho, Bipartition::contiguous(1, 1), Subsystem::System);
  EXPECT_LE(max_abs_diff(sys.mat(), maximally_mixed(1).mat()), 1e-15);
}

TEST(States, PartialTraceWEnvironment) {
  const DensityMatrix rho = density_from_pure(w_state());
  const DensityMatrix env =
      partial_trace(rho, Bipartition::contiguous(2, 1), Subsystem::Environment);
  EXPECT_NEAR(env.mat()(0, 0).real(), 2.0 / 3, 1e-15);
  EXPECT_NEAR(env.mat()(1, 1).real(), 1.0 / 3, 1e-15);
  EXPECT_NEAR(std::abs(env.mat()(0, 1)), 0.0, 1e-15);
}

TEST(States, PartialTraceOfProductRecoversFactor) {
  Rng rng(31);
  const DensityMatrix a = random_state(2, rng);
  const DensityMatrix b = random_state(1, rng);
  const DensityMatrix ab = tensor(a, b);
  const Bipartition split = Bipartition::contiguous(2, 1);
  EXPECT_LE(max_abs_diff(partial_trace(ab, split, Subsystem::System).mat(), a.mat()), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(ab, split, Subsystem::Environment).mat(), b.mat()), 1e-15);
}

TEST(States, PartialTraceMatchesProjectorOracle) {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    const Bipartition split = Bipartition::contiguous(2, 1);
    EXPECT_LE(max_abs_diff(partial_trace(rho, split, Subsystem::System).mat(),
                           oracle::trace_out_last(rho.mat(), 4, 2)),
              1e-14);
    EXPECT_LE(max_abs_diff(partial_trace(rho, split, Subsystem::Environment).mat(),
                           oracle::trace_out_first(rho.mat(), 4, 2)),
              1e-14);
  }
}

TEST(States, PartialTraceStepwiseEqualsJoint) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    // Trace qubit 2, then qubit 1 of the remainder, versus both at once.
    const DensityMatrix q01 = partial_trace(rho, Bipartition::contiguous(2, 1), Subsystem::System);
    const DensityMatrix q0 = partial_trace(q01, Bipartition::contiguous(1, 1), Subsystem::System);
    const DensityMatrix joint =
        partial_trace(rho, Bipartition::contiguous(1, 2), Subsystem::System);
    EXPECT_LE(max_abs_diff(q0.mat(), joint.mat()), 1e-12);
    EXPECT_NEAR(trace(q0.mat()).real(), 1.0, 1e-12);
  }
}

TEST(States, PartialTraceIsLocal) {
  Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    const ComplexMatrix us = random_unitary(4, rng);
    const ComplexMatrix ue = random_unitary(2, rng);
    const ComplexMatrix u = kron(us, ue);
    const DensityMatrix evolved = DensityMatrix::validated(u * rho.mat() * adjoint(u));
    const Bipartition split = Bipartition::contiguous(2, 1);
    const ComplexMatrix lhs = partial_trace(evolved, split, Subsystem::System).mat();
    const ComplexMatrix rhs = us * partial_trace(rho, split, Subsystem::System).mat() * adjoint(us);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-11);
  }
}

TEST(States, NonContiguousBipartition) {
  // |0>|1>|0> with S = {0, 2}: S is |00>, E is |1>.
  const DensityMatrix rho = density_from_pure(PureState::basis("010"));
  const Bipartition split = Bipartition::from_system({0, 2}, 3);
  EXPECT_EQ(split.environment(), std::vector<std::size_t>{1});
  const DensityMatrix s = partial_trace(rho, split, Subsystem::System);
  const DensityMatrix e = partial_trace(rho, split, Subsystem::Environment);
  EXPECT_EQ(s.mat()(0, 0), Complex(1.0));
  EXPECT_EQ(e.mat()(1, 1), Complex(1.0));
  // Kept-order follows the system list: S = {2, 0} swaps the two qubits.
  const DensityMatrix swapped = partial_trace(density_from_pure(PureState::basis("100")),
                                              Bipartition::from_system({2, 0}, 3),
                                              Subsystem::System);
  EXPECT_EQ(swapped.mat()(0b01, 0b01), Complex(1.0));
}

TEST(States, BipartitionErrors) {
  EXPECT_THROW(Bipartition::make({0, 1}, {1}), ValidationError);
  EXPECT_THROW(Bipartition::make({0, 5}, {1}), ValidationError);
  EXPECT_THROW(Bipartition::make({}, {0}), ValidationError);
  const DensityMatrix rho = maximally_mixed(2);
  EXPECT_THROW((void)partial_trace(rho, Bipartition::contiguous(2, 1), Subsystem::System),
               DimensionError);
}

TEST(States, MaximallyMixedAndPurity) {
  EXPECT_EQ(maximally_mixed(1).mat(), (ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}));
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_DOUBLE_EQ(purity(maximally_mixed(n)), std::pow(2.0, -static_cast<double>(n)));
  }
  EXPECT_THROW((void)maximally_mixed(0), ValidationError);
  EXPECT_DOUBLE_EQ(purity(maximally_mixed(2)), 0.25);
  const std::vector<double> diag = {2.0 / 3, 1.0 / 3};
  EXPECT_NEAR(purity(DensityMatrix::validated(ComplexMatrix::diagonal(diag))), 5.0 / 9, 1e-15);
  EXPECT_NEAR(purity(density_from_pure(w_state())), 1.0, 1e-12);
}

TEST(States, PurityBounds) {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const DensityMatrix rho = DensityMatrix::validated(
        random_density_matrix(qubit_dim(n), 1 + rng.index(qubit_dim(n)), rng));
    const double p = purity(rho);
    EXPECT_GE(p, std::pow(2.0, -static_cast<double>(n)) - 1e-12);
    EXPECT_LE(p, 1.0 + 1e-9);
  }
}

}  // namespace
}  // namespace divisi
