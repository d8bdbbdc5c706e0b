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


#include <algorithm>

#include <gtest/gtest.h>

#include "zagier/error.hpp"
#include "zagier/suites.hpp"

namespace zagier {
namespace {

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 9u);
  EXPECT_TRUE(is_suite("all"));
  EXPECT_TRUE(is_suite("central"));
  EXPECT_FALSE(is_suite("everything"));
  EXPECT_THROW(run_suite("everything", {}), Error);
}

TEST(Suites, SortedAndPassing) {
  SuiteOptions o;
  o.quick = true;
  const std::vector<CheckReport> r = run_suite("gauss", o);
  EXPECT_GT(r.size(), 100u);
  EXPECT_TRUE(std::is_sorted(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const CheckReport& x : r) EXPECT_TRUE(x.pass) << x.name;
}

TEST(Suites, ToleranceScaleTightens) {
  SuiteOptions o;
  o.tol_scale = 1e-30;
  const std::vector<CheckReport> r = run_suite("divisor", o);
  EXPECT_TRUE(std::any_of(r.begin(), r.end(), [](const CheckReport& x) { return !x.pass; }));
  EXPECT_THROW(run_suite("divisor", SuiteOptions{.tol_scale = 0.0}), Error);
}

TEST(Suites, OverridesSelectOneIdentity) {
  SuiteOptions o;
  o.n = 1;
  const std::vector<CheckReport> r = run_suite("central", o);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.front().name, "central.n=1");
  EXPECT_TRUE(r.front().pass);
}

}  // namespace
}  // namespace zagier
