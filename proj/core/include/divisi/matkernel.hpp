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

#ifndef DIVISI_MATKERNEL_HPP_
#define DIVISI_MATKERNEL_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "divisi/errors.hpp"

namespace divisi {

using Complex = std::complex<double>;

// Dense row-major complex matrix. All entries are finite.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t i) const {
    return std::span<const Complex>(entries_).subspan(i * cols_, cols_);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  // "RxC" for error messages.
  std::string shape() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

// (a ⊗ b)[i*b.rows + k, j*b.cols + l] = a[i,j] * b[k,l]
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

// |v><w|
ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

// max_ij |h_ij - conj(h_ji)|
double max_asymmetry(const ComplexMatrix& h);

// max_ij |(U^dag U - I)_ij|
double unitarity_deviation(const ComplexMatrix& u);

inline constexpr double kDefaultHermitianTol = 1e-9;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector for values[k]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. The input is
// symmetrized as (h + h^dag)/2 after the asymmetry check.
HermitianEigen hermitian_eigh(const ComplexMatrix& h, double tol = kDefaultHermitianTol);

std::vector<double> hermitian_eigvals(const ComplexMatrix& h,
                                      double tol = kDefaultHermitianTol);

}  // namespace divisi

#endif  // DIVISI_MATKERNEL_HPP_
