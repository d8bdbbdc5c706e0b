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

#ifndef ZAGIER_SUITES_HPP_
#define ZAGIER_SUITES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "zagier/report.hpp"

namespace zagier {

struct SuiteOptions {
  TruncationParams tp;
  // Smaller grids everywhere; every identity is still exercised.
  bool quick = false;
  // Multiplies every tolerance.
  double tol_scale = 1.0;
  // Overrides for the single-identity suites (decomposition, dual, continuous,
  // central). Unset means the built-in parameter sets.
  std::optional<int> n;
  std::optional<cplx> s;
  std::optional<double> t;
};

// gauss, kloosterman, divisor, eisenstein, transforms, decomposition, dual,
// continuous, central.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Reports of one suite, or of every suite for "all", sorted by name. A check
// that throws is recorded as a failing report carrying the error text.
// Throws BadParam for an unknown suite.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace zagier

#endif  // ZAGIER_SUITES_HPP_
