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


#ifndef ZAGIER_REPORT_HPP_
#define ZAGIER_REPORT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zagier/specfun.hpp"

namespace zagier {

// Truncation knobs shared by every check. All must be positive.
struct TruncationParams {
  std::int64_t Q_max = 256;
  std::int64_t L_max = 100000;
  std::int64_t C_max = 2000;
  double T_max = 16.0;
  QuadratureSpec quad{1e-9, 1e-9};

  // Throws BadParam on a non-positive field.
  void validate() const;
};

// Outcome of comparing two evaluations of the same quantity. A check passes
// when either the absolute or the relative error is within tolerance.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  cplx lhs{};
  cplx rhs{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  TruncationParams truncations;
  std::string note;
};

CheckReport make_report(std::string name,
                        std::vector<std::pair<std::string, std::string>> params,
                        cplx lhs, cplx rhs, double tolerance,
                        const TruncationParams& tp, std::string note = {});

// Relative-only variant: passes iff rel_err <= tolerance.
CheckReport make_relative_report(std::string name,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 cplx lhs, cplx rhs, double tolerance,
                                 const TruncationParams& tp, std::string note = {});

// Shortest round-trip decimal form, used for report parameters.
std::string format_double(double x);
std::string format_complex(cplx z);

}  // namespace zagier

#endif  // ZAGIER_REPORT_HPP_
