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


#include "output.hpp"

#include <cmath>
#include <cstdint>
#include <limits>


namespace zagier::cli {
namespace {

// JSON has no NaN or infinity; those become null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string joined(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out;
  for (const auto& [k, v] : kv) out += (out.empty() ? "" : ";") + k + "=" + v;
  return out;
}

std::string text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "nan";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return format_double(v.get<double>());
  if (v.is_object() && v.contains("re")) {
    const auto part = [](const Json& x) {
      return x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>();
    };
    return format_complex({part(v["re"]), part(v["im"])});
  }
  return v.dump();
}

std::string truncation_text(const TruncationParams& tp) {
  return "Q_max=" + std::to_string(tp.Q_max) + ";L_max=" + std::to_string(tp.L_max) +
         ";C_max=" + std::to_string(tp.C_max) + ";T_max=" + format_double(tp.T_max) +
         ";quad_abs=" + format_double(tp.quad.abs_tol) + ";quad_rel=" + format_double(tp.quad.rel_tol);
}

}  // namespace

Json to_json(cplx z) {
  Json j;
  j["re"] = number(z.real());
  j["im"] = number(z.imag());
  return j;
}

Json to_json(const TruncationParams& tp) {
  Json j;
  j["Q_max"] = tp.Q_max;
  j["L_max"] = tp.L_max;
  j["C_max"] = tp.C_max;
  j["T_max"] = tp.T_max;
  j["quad_abs_tol"] = tp.quad.abs_tol;
  j["quad_rel_tol"] = tp.quad.rel_tol;
  return j;
}

Json to_json(const CheckReport& r, const Stamp& stamp) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["abs_err"] = number(r.abs_err);
  j["rel_err"] = number(r.rel_err);
  j["tolerance"] = number(r.tolerance);
  j["note"] = r.note;
  j["truncations"] = to_json(r.truncations);
  j["version"] = stamp.version;
  if (stamp.timestamp) j["timestamp"] = *stamp.timestamp;
  return j;
}

Json to_json(const Record& r, const Stamp& stamp) {
  Json j;
  j["command"] = r.command;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  Json values = Json::object();
  for (const Field& f : r.values) values[f.key] = f.value;
  j["values"] = std::move(values);
  j["note"] = r.note;
  j["truncations"] = to_json(stamp.tp);
  j["version"] = stamp.version;
  if (stamp.timestamp) j["timestamp"] = *stamp.timestamp;
  return j;
}

void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, const Stamp& stamp, Format f) {
  switch (f) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const CheckReport& r : reports) arr.push_back(to_json(r, stamp));
      os << arr.dump(2) << "\n";
      return;
    }
    case Format::kCsv: {
      os << "name,pass,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tolerance,note,truncations,version";
      if (stamp.timestamp) os << ",timestamp";
      os << "\n";
      for (const CheckReport& r : reports) {
        os << csv_escape(r.name) << "," << (r.pass ? "true" : "false") << "," << csv_escape(joined(r.params))
           << "," << format_double(r.lhs.real()) << "," << format_double(r.lhs.imag()) << ","
           << format_double(r.rhs.real()) << "," << format_double(r.rhs.imag()) << ","
           << format_double(r.abs_err) << "," << format_double(r.rel_err) << "," << format_double(r.tolerance)
           << "," << csv_escape(r.note) << "," << csv_escape(truncation_text(r.truncations)) << ","
           << stamp.version;
        if (stamp.timestamp) os << "," << *stamp.timestamp;
        os << "\n";
      }
      return;
    }
    case Format::kHuman: {
      std::size_t failed = 0;
      for (const CheckReport& r : reports) {
        failed += r.pass ? 0 : 1;
        os << (r.pass ? "PASS " : "FAIL ") << r.name << "  abs " << format_double(r.abs_err) << "  rel "
           << format_double(r.rel_err) << "  tol " << format_double(r.tolerance);
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
      }
      os << reports.size() - failed << "/" << reports.size() << " passed; " << truncation_text(stamp.tp)
         << "; version " << stamp.version << "\n";
      return;
    }
  }
}

void write_record(std::ostream& os, const Record& r, const Stamp& stamp, Format f) {
  switch (f) {
    case Format::kJson:
      os << to_json(r, stamp).dump(2) << "\n";
      return;
    case Format::kCsv:
      os << "field,value\n";
      os << "command," << csv_escape(r.command) << "\n";
      for (const auto& [k, v] : r.inputs) os << csv_escape("input." + k) << "," << csv_escape(v) << "\n";
      for (const Field& x : r.values) os << csv_escape(x.key) << "," << csv_escape(text(x.value)) << "\n";
      os << "note," << csv_escape(r.note) << "\n";
      os << "truncations," << csv_escape(truncation_text(stamp.tp)) << "\n";
      os << "version," << stamp.version << "\n";
      if (stamp.timestamp) os << "timestamp," << *stamp.timestamp << "\n";
      return;
    case Format::kHuman:
      os << r.command;
      for (const auto& [k, v] : r.inputs) os << " " << k << "=" << v;
      os << "\n";
      for (const Field& x : r.values) os << "  " << x.key << ": " << text(x.value) << "\n";
      if (!r.note.empty()) os << "  note: " << r.note << "\n";
      return;
  }
}

}  // namespace zagier::cli
