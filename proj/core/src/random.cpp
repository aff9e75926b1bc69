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

#include "divisi/random.hpp"

#include <cmath>

namespace divisi {

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (Complex& z : g.entries()) z = rng.complex_normal();

  // Modified Gram-Schmidt over columns. Dividing by the positive column norm
  // is the phase fix that makes the distribution Haar.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex dot{};
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(g(i, k)) * g(i, j);
      for (std::size_t i = 0; i < dim; ++i) g(i, j) -= dot * g(i, k);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < dim; ++i) g(i, j) /= norm;
  }
  return g;
}

std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (Complex& z : v) {
    z = rng.complex_normal();
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (Complex& z : v) z /= norm;
  return v;
}

ComplexMatrix random_density_matrix(std::size_t dim, std::size_t rank, Rng& rng) {
  ComplexMatrix g(dim, rank);
  for (Complex& z : g.entries()) z = rng.complex_normal();
  ComplexMatrix rho = g * adjoint(g);
  const double tr = trace(rho).real();
  rho *= 1.0 / tr;
  return 0.5 * (rho + adjoint(rho));
}

}  // namespace divisi
