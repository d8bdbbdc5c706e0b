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


#include "zagier/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "zagier/error.hpp"

namespace zagier {

void TruncationParams::validate() const {
  if (Q_max <= 0 || L_max <= 0 || C_max <= 0 || !(T_max > 0.0) || !(quad.abs_tol > 0.0) ||
      !(quad.rel_tol > 0.0)) {
    throw Error(ErrorKind::kBadParam, "truncation parameters must be positive");
  }
}

namespace {

CheckReport fill(std::string name, std::vector<std::pair<std::string, std::string>> params,
                 cplx lhs, cplx rhs, double tolerance, const TruncationParams& tp,
                 std::string note) {
  CheckReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_err = scale > 0.0 ? r.abs_err / scale : 0.0;
  r.tolerance = tolerance;
  r.truncations = tp;
  r.note = std::move(note);
  return r;
}

}  // namespace

CheckReport make_report(std::string name, std::vector<std::pair<std::string, std::string>> params,
                        cplx lhs, cplx rhs, double tolerance, const TruncationParams& tp,
                        std::string note) {
  CheckReport r = fill(std::move(name), std::move(params), lhs, rhs, tolerance, tp, std::move(note));
  r.pass = std::isfinite(r.abs_err) && (r.abs_err <= tolerance || r.rel_err <= tolerance);
  return r;
}

CheckReport make_relative_report(std::string name,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 cplx lhs, cplx rhs, double tolerance,
                                 const TruncationParams& tp, std::string note) {
  CheckReport r = fill(std::move(name), std::move(params), lhs, rhs, tolerance, tp, std::move(note));
  r.pass = std::isfinite(r.rel_err) && r.rel_err <= tolerance;
  return r;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "" : "+") + format_double(z.imag()) + "i";
}

}  // namespace zagier
