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

#include "zagier/error.hpp"

namespace zagier {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonInvertible: return "NonInvertible";
    case ErrorKind::kBadCoprimality: return "BadCoprimality";
    case ErrorKind::kBadModulus: return "BadModulus";
    case ErrorKind::kPoleAt: return "PoleAt";
    case ErrorKind::kDivergent: return "Divergent";
    case ErrorKind::kBadParam: return "BadParam";
    case ErrorKind::kOutOfDomain: return "OutOfDomain";
    case ErrorKind::kToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::kMissingEnvelope: return "MissingEnvelope";
    case ErrorKind::kUnknownRow: return "UnknownRow";
  }
  return "Unknown";
}

}  // namespace zagier
