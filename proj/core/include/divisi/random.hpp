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

#ifndef DIVISI_RANDOM_HPP_
#define DIVISI_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "divisi/matkernel.hpp"

namespace divisi {

// Seeded source for every randomized routine in the library. The same seed
// always yields the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() { return {normal(), normal()}; }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Haar-distributed unitary: Gram-Schmidt on a complex Gaussian matrix, with
// R's diagonal made positive.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// Uniformly random unit vector in C^dim.
std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng);

// G G^dag / Tr(G G^dag) with G a dim x rank complex Gaussian matrix.
ComplexMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng);

}  // namespace divisi

#endif  // DIVISI_RANDOM_HPP_
