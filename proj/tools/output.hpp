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


#ifndef ZAGIER_TOOLS_OUTPUT_HPP_
#define ZAGIER_TOOLS_OUTPUT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "zagier/report.hpp"

namespace zagier::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kHuman };

// Fields stamped onto every record.
struct Stamp {
  std::string version;
  TruncationParams tp;
  std::optional<std::string> timestamp;
};

Json to_json(cplx z);
Json to_json(const TruncationParams& tp);
Json to_json(const CheckReport& r, const Stamp& stamp);

// One computed quantity: a label and a real, complex or text value.
struct Field {
  std::string key;
  Json value;
};

// Result of a compute command.
struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Field> values;
  std::string note;
};

Json to_json(const Record& r, const Stamp& stamp);

void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, const Stamp& stamp, Format f);
void write_record(std::ostream& os, const Record& r, const Stamp& stamp, Format f);

}  // namespace zagier::cli

#endif  // ZAGIER_TOOLS_OUTPUT_HPP_
