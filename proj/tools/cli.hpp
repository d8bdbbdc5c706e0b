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


#ifndef ZAGIER_TOOLS_CLI_HPP_
#define ZAGIER_TOOLS_CLI_HPP_

#include <ostream>
#include <string>

#include "zagier/arith.hpp"

namespace zagier::cli {

// Parses the arguments, runs one subcommand and writes its output to `out`
// (or to --out). Returns 0 when every check passed, 1 on a failed check or a
// numerical failure, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "2.5", "-1e-3", "1.5+0.4i", "0.3-2i", "2i", "-i". Throws BadParam.
cplx parse_complex(const std::string& text);

}  // namespace zagier::cli

#endif  // ZAGIER_TOOLS_CLI_HPP_
