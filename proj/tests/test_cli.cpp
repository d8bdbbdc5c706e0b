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


#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "json.hpp"
#include "zagier/error.hpp"

namespace zagier::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "zagier");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("2.5"), cplx(2.5));
  EXPECT_EQ(parse_complex("-1e-3"), cplx(-1e-3));
  EXPECT_EQ(parse_complex("1.5+0.4i"), cplx(1.5, 0.4));
  EXPECT_EQ(parse_complex("0.3-2i"), cplx(0.3, -2.0));
  EXPECT_EQ(parse_complex("2i"), cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-2+1e+1i"), cplx(0.01, 10.0));
  for (const char* bad : {"", "x", "2.5x", "1+", "+i+", "1..2", "nan", "i1"}) {
    EXPECT_THROW(parse_complex(bad), Error) << bad;
  }
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nonsense"}).code, 2);
  EXPECT_EQ(call({"lseries", "--D", "5", "--s", "2.5x"}).code, 2);
  EXPECT_EQ(call({"lseries", "--D", "5"}).code, 2);
  EXPECT_EQ(call({"gauss", "--q", "0"}).code, 2);
  EXPECT_EQ(call({"verify", "nope"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "gauss", "--q", "4"}).code, 2);
  EXPECT_EQ(call({"--Q-max", "0", "verify", "gauss"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, GaussRecord) {
  const Result r = call({"--deterministic", "gauss", "--a", "1", "--n", "0", "--q", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["values"]["brute"]["re"].get<double>(), 2.0);
  EXPECT_EQ(j["values"]["closed"]["im"].get<double>(), 2.0);
  EXPECT_LT(j["values"]["abs_diff"].get<double>(), 1e-12);
  EXPECT_EQ(j["truncations"]["Q_max"].get<int>(), 256);
  EXPECT_FALSE(j.contains("timestamp"));
  EXPECT_TRUE(nlohmann::ordered_json::parse(call({"gauss", "--q", "4"}).out).contains("timestamp"));
}

TEST(Cli, LseriesNote) {
  const Result r = call({"lseries", "--D", "2", "--s", "2.5", "--terms", "500"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["values"]["value"]["re"].get<double>(), 0.0);
  EXPECT_NE(j["note"].get<std::string>().find("b_q(D) = 0"), std::string::npos);
}

TEST(Cli, PhiPrintsBothSides) {
  const Result r = call({"phi", "--N", "64", "--cusp", "1/8", "--u", "3", "--m", "5", "--s", "1.2", "--a", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_TRUE(j["values"].contains("closed"));
  EXPECT_TRUE(j["values"].contains("brute"));
  EXPECT_LT(j["values"]["rel_err"].get<double>(), 1e-5);
}

TEST(Cli, VerifyReportSchema) {
  const Result r = call({"--deterministic", "verify", "divisor"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.front().items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "pass", "params", "lhs", "rhs", "abs_err", "rel_err",
                                            "tolerance", "note", "truncations", "version"}));
  for (std::size_t i = 1; i < j.size(); ++i) EXPECT_LT(j[i - 1]["name"], j[i]["name"]);
  EXPECT_EQ(call({"--deterministic", "verify", "divisor"}).out, r.out);
}

TEST(Cli, VerifyFailureExitsOne) {
  const Result r = call({"verify", "divisor", "--tol-scale", "1e-30", "--format", "csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("name,pass,params,", 0), 0u);
  EXPECT_NE(r.err.find("checks failed"), std::string::npos);
}

TEST(Cli, HumanFormat) {
  const Result r = call({"--format", "human", "K", "--n", "1", "--l", "1", "--q", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("closed:"), std::string::npos);
}

}  // namespace
}  // namespace zagier::cli
