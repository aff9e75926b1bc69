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

#ifndef DIVISI_ERRORS_HPP_
#define DIVISI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace divisi {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes or qubit counts that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input text or files that cannot be parsed into the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// A value violates a domain invariant (trace, positivity, unitarity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NonHermitianError : public ValidationError {
 public:
  NonHermitianError(const std::string& what, double asymmetry)
      : ValidationError(what), asymmetry_(asymmetry) {}
  double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

class NonUnitaryError : public ValidationError {
 public:
  NonUnitaryError(const std::string& what, double deviation)
      : ValidationError(what), deviation_(deviation) {}
  double deviation() const noexcept { return deviation_; }

 private:
  double deviation_;
};

}  // namespace divisi

#endif  // DIVISI_ERRORS_HPP_
