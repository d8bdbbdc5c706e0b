// Copyright 2026 The Zagier Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZAGIER_ERROR_HPP_
#define ZAGIER_ERROR_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace zagier {

enum class ErrorKind {
  kNonInvertible,
  kBadCoprimality,
  kBadModulus,
  kPoleAt,
  kDivergent,
  kBadParam,
  kOutOfDomain,
  kToleranceNotMet,
  kMissingEnvelope,
  kUnknownRow,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by adaptive routines; carries the best value reached.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, std::complex<double> best,
                  double error_estimate)
      : Error(ErrorKind::kToleranceNotMet, what),
        best_(best),
        error_estimate_(error_estimate) {}

  std::complex<double> best() const { return best_; }
  double error_estimate() const { return error_estimate_; }

 private:
  std::complex<double> best_;
  double error_estimate_;
};

}  // namespace zagier

#endif  // ZAGIER_ERROR_HPP_
