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


#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "output.hpp"
#include "zagier/eisenstein.hpp"
#include "zagier/error.hpp"
#include "zagier/lseries.hpp"
#include "zagier/suites.hpp"
#include "zagier/transforms.hpp"

#ifndef ZAGIER_VERSION
#define ZAGIER_VERSION "unknown"
#endif

namespace zagier::cli {
namespace {

double parse_real(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s == "-") {
    if (s.empty()) return 1.0;
    return -1.0;
  }
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x)) {
    throw Error(ErrorKind::kBadParam, "malformed number '" + whole + "'");
  }
  return x;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::kToleranceNotMet:
    case ErrorKind::kDivergent:
    case ErrorKind::kMissingEnvelope:
      return false;
    default:
      return true;
  }
}

Field value(std::string key, cplx z) { return {std::move(key), to_json(z)}; }
Field value(std::string key, double x) { return {std::move(key), Json(x)}; }
Field value(std::string key, i64 x) { return {std::move(key), Json(x)}; }

EisCusp parse_eis_cusp(const std::string& a) {
  if (a == "inf") return EisCusp::kInfinity;
  if (a == "0") return EisCusp::kZero;
  throw Error(ErrorKind::kBadParam, "--a must be inf or 0");
}

// "0", "inf" or "1/f"; u multiplies f.
Cusp parse_cusp(int N, const std::string& label, i64 u) {
  if (label == "0") return Cusp::Make(N, 1, 1);
  if (label == "inf") return Cusp::Make(N, 1, N);
  if (label.rfind("1/", 0) != 0) throw Error(ErrorKind::kBadParam, "--cusp must be 0, inf or 1/f");
  const std::string tail = label.substr(2);
  i64 f = 0;
  const auto [end, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), f);
  if (ec != std::errc() || end != tail.data() + tail.size()) {
    throw Error(ErrorKind::kBadParam, "malformed cusp '" + label + "'");
  }
  return Cusp::Make(N, u, f);
}

struct Globals {
  TruncationParams tp;
  double tol_scale = 1.0;
  double quad_tol = 1e-9;
  std::string out_path;
  Format format = Format::kJson;
  bool deterministic = false;
};

}  // namespace

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw Error(ErrorKind::kBadParam, "empty complex number");
  if (s.back() != 'i') return parse_real(s, text);
  const std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, text)};
  const std::string_view re = body.substr(0, split);
  if (re.empty() || re == "-" || re == "+") throw Error(ErrorKind::kBadParam, "malformed number '" + text + "'");
  return {parse_real(re, text), parse_real(body.substr(split), text)};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential sums, Eisenstein coefficients, Bessel transforms and the checks that tie them together",
               "zagier"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ZAGIER_VERSION);

  Globals g;
  std::string format_name = "json";
  app.add_option("--tol-scale", g.tol_scale, "Multiply every tolerance")->check(CLI::PositiveNumber);
  app.add_option("--Q-max", g.tp.Q_max, "Modulus cutoff of the decomposition sums")->check(CLI::PositiveNumber);
  app.add_option("--L-max", g.tp.L_max, "Cutoff of the continuous-spectrum l-sums")->check(CLI::PositiveNumber);
  app.add_option("--C-max", g.tp.C_max, "Modulus cutoff of the Eisenstein brute force")->check(CLI::PositiveNumber);
  app.add_option("--T-max", g.tp.T_max, "Cutoff of the t-integrals")->check(CLI::PositiveNumber);
  app.add_option("--quad-tol", g.quad_tol, "Absolute and relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out_path, "Write the output here instead of stdout");
  app.add_option("--format", format_name, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_flag("--deterministic", g.deterministic, "Omit the timestamp so reruns are byte-identical");

  // lseries
  i64 D = 0;
  std::string s_text;
  i64 terms = 20000;
  auto* lseries = app.add_subcommand("lseries", "Zagier L-series by its truncated Dirichlet series");
  lseries->add_option("--D", D, "Discriminant")->required();
  lseries->add_option("--s", s_text, "Complex s, Re s > 1")->required();
  lseries->add_option("--terms", terms, "Number of q terms")->check(CLI::PositiveNumber);

  // gauss
  i64 a = 1, n = 0, q = 1, m = 0;
  bool char_sum = false;
  auto* gauss = app.add_subcommand("gauss", "Quadratic Gauss sum G(a,n;q), or g(chi_4;q;m) with --char");
  gauss->add_option("--q", q, "Modulus")->required();
  gauss->add_option("--a", a, "Leading coefficient");
  gauss->add_option("--n", n, "Linear coefficient");
  gauss->add_flag("--char", char_sum, "Character sum instead, 4 | q");
  gauss->add_option("--m", m, "Frequency of the character sum");

  // kloosterman
  i64 c_mod = 1;
  std::string pair = "classical";
  auto* kloost = app.add_subcommand("kloosterman", "Kloosterman sums S(m,n;c) and the chi_4-twisted cusp pairs");
  kloost->add_option("--m", m, "First frequency")->required();
  kloost->add_option("--n", n, "Second frequency")->required();
  kloost->add_option("--c", c_mod, "Modulus")->required();
  kloost->add_option("--pair", pair, "classical, inf-inf or inf-0")
      ->check(CLI::IsMember({"classical", "inf-inf", "inf-0"}));
  i64 level = 4;
  kloost->add_option("--level", level, "Character level for the cusp pairs");

  // K
  i64 l = 0;
  auto* kcmd = app.add_subcommand("K", "K(n,l;q), the sum of products of Gauss sums");
  kcmd->add_option("--n", n, "First frequency")->required();
  kcmd->add_option("--l", l, "Second frequency")->required();
  kcmd->add_option("--q", q, "Modulus")->required();

  // phi
  int N = 4;
  std::string cusp_label, a_label = "inf";
  i64 u = 1;
  auto* phi = app.add_subcommand("phi", "Eisenstein Fourier coefficient at a singular cusp");
  phi->add_option("--N", N, "Level: 4, 16 or 64")->required();
  phi->add_option("--cusp", cusp_label, "0, inf or 1/f")->required();
  phi->add_option("--u", u, "Unit multiplying f in the cusp 1/(uf)");
  phi->add_option("--m", m, "Frequency")->required();
  phi->add_option("--s", s_text, "Complex s, Re s > 1")->required();
  phi->add_option("--a", a_label, "Atkin-Lehner cusp of the series: inf or 0");

  // transform
  std::string kind, t_text = "0";
  int nn = 4, k = 3;
  double x = 1.0, a1 = 1.0, a2 = 3.0;
  auto* transform = app.add_subcommand("transform", "Bessel transforms of the bump test function");
  transform->add_option("--kind", kind, "psi, psiH, psiD, psiD-special, h1 or h2")
      ->required()
      ->check(CLI::IsMember({"psi", "psiH", "psiD", "psiD-special", "h1", "h2"}));
  transform->add_option("--n", nn, "Shift n");
  transform->add_option("--s", s_text, "Complex s")->required();
  transform->add_option("--k", k, "Weight for psiH");
  transform->add_option("--t", t_text, "Spectral parameter; complex for h1 and h2");
  transform->add_option("--x", x, "Argument for psi");
  transform->add_option("--a1", a1, "Left end of the bump support");
  transform->add_option("--a2", a2, "Right end of the bump support");

  // verify
  std::string suite;
  SuiteOptions so;
  std::optional<int> v_n;
  std::string v_s;
  std::optional<double> v_t;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write its reports");
  verify->add_option("suite", suite, "gauss, kloosterman, divisor, eisenstein, transforms, decomposition, dual, "
                                     "continuous, central or all")
      ->required();
  verify->add_flag("--quick", so.quick, "Reduced grids");
  verify->add_option("--n", v_n, "Shift n for the single-identity suites");
  verify->add_option("--s", v_s, "Complex s for the single-identity suites");
  verify->add_option("--t", v_t, "Spectral parameter for the continuous suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << ZAGIER_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  g.format = format_name == "csv" ? Format::kCsv : format_name == "human" ? Format::kHuman : Format::kJson;
  g.tp.quad = {g.quad_tol, g.quad_tol};

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << g.out_path << "\n";
      return 2;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;
  Stamp stamp{ZAGIER_VERSION, g.tp, g.deterministic ? std::nullopt : std::optional<std::string>(utc_now())};

  try {
    g.tp.validate();
    if (verify->parsed()) {
      if (!is_suite(suite)) throw Error(ErrorKind::kBadParam, "unknown suite '" + suite + "'");
      so.tp = g.tp;
      so.tol_scale = g.tol_scale;
      so.n = v_n;
      so.t = v_t;
      if (!v_s.empty()) so.s = parse_complex(v_s);
      const std::vector<CheckReport> reports = run_suite(suite, so);
      write_reports(sink, reports, stamp, g.format);
      sink.flush();
      std::size_t failed = 0;
      for (const CheckReport& r : reports) failed += r.pass ? 0 : 1;
      if (failed > 0) err << failed << " of " << reports.size() << " checks failed\n";
      return failed == 0 ? 0 : 1;
    }

    Record rec;
    if (lseries->parsed()) {
      const cplx s = parse_complex(s_text);
      const SeriesValue v = zagier_L(D, s, terms);
      rec.command = "lseries";
      rec.inputs = {{"D", std::to_string(D)}, {"s", format_complex(s)}, {"terms", std::to_string(terms)}};
      rec.values = {value("value", v.value), value("tail_bound", v.tail_bound), value("terms_used", v.terms_used),
                    {"heuristic_tail", Json(v.heuristic)}};
      if (mod(D, 4) == 2 || mod(D, 4) == 3) rec.note = "b_q(D) = 0 for every q when D = 2, 3 mod 4";
    } else if (gauss->parsed()) {
      rec.command = "gauss";
      if (char_sum) {
        const ExpSum brute = gauss_char_sum_brute(m, q), closed = gauss_char_sum(m, q, 0);
        rec.inputs = {{"m", std::to_string(m)}, {"q", std::to_string(q)}, {"sum", "g(chi_4;q;m)"}};
        rec.values = {value("brute", brute.value), value("closed", closed.value),
                      value("abs_diff", std::abs(brute.value - closed.value))};
      } else {
        const ExpSum brute = gauss_quadratic_brute(a, n, q), closed = gauss_quadratic_closed(a, n, q);
        rec.inputs = {{"a", std::to_string(a)}, {"n", std::to_string(n)}, {"q", std::to_string(q)}};
        rec.values = {value("brute", brute.value), value("closed", closed.value),
                      value("abs_diff", std::abs(brute.value - closed.value))};
      }
    } else if (kloost->parsed()) {
      rec.command = "kloosterman";
      rec.inputs = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"c", std::to_string(c_mod)},
                    {"pair", pair}};
      if (pair == "classical") {
        rec.values = {value("value", kloosterman(m, n, c_mod))};
      } else {
        const Character chi(level);
        rec.inputs.emplace_back("level", std::to_string(level));
        const ExpSum v = pair == "inf-inf" ? kloosterman_inf_inf(m, n, c_mod, chi)
                                           : kloosterman_inf_zero(m, n, c_mod, chi);
        rec.values = {value("value", v.value), value("terms", v.terms)};
      }
    } else if (kcmd->parsed()) {
      const ExpSum brute = K_brute(n, l, q), closed = K_closed(n, l, q);
      rec.command = "K";
      rec.inputs = {{"n", std::to_string(n)}, {"l", std::to_string(l)}, {"q", std::to_string(q)}};
      rec.values = {value("brute", brute.value), value("closed", closed.value),
                    value("abs_diff", std::abs(brute.value - closed.value))};
    } else if (phi->parsed()) {
      const cplx s = parse_complex(s_text);
      const EisCusp eis = parse_eis_cusp(a_label);
      const Cusp cusp = parse_cusp(N, cusp_label, u);
      const PhiValue closed = phi_closed(eis, cusp, m, s);
      rec.command = "phi";
      rec.inputs = {{"N", std::to_string(N)}, {"cusp", cusp.label()}, {"m", std::to_string(m)},
                    {"s", format_complex(s)},  {"a", a_label}};
      rec.values = {value("closed", closed.value), {"row", Json(closed.formula_tag)}};
      if (eis == EisCusp::kInfinity) {
        const SeriesValue brute = phi_bruteforce_inf(cusp, m, s, g.tp.C_max);
        const double scale = std::max(std::abs(closed.value), std::abs(brute.value));
        rec.values.push_back(value("brute", brute.value));
        rec.values.push_back(value("brute_tail_bound", brute.tail_bound));
        rec.values.push_back(value("abs_err", std::abs(closed.value - brute.value)));
        rec.values.push_back(value("rel_err", scale > 0.0 ? std::abs(closed.value - brute.value) / scale : 0.0));
      } else {
        rec.note = "brute force is available for the series at inf only";
      }
    } else if (transform->parsed()) {
      const cplx s = parse_complex(s_text);
      const TransformContext ctx{nn, s, TestFunction(a1, a2), g.tp.quad};
      ctx.validate();
      rec.command = "transform";
      rec.inputs = {{"kind", kind}, {"n", std::to_string(nn)}, {"s", format_complex(s)},
                    {"a1", format_double(a1)}, {"a2", format_double(a2)}};
      if (kind == "psi") {
        rec.inputs.emplace_back("x", format_double(x));
        rec.values = {value("cosine", psi_kernel(x, ctx)), value("contour", psi_contour(x, ctx, -0.5))};
      } else if (kind == "psiH") {
        rec.inputs.emplace_back("k", std::to_string(k));
        rec.values = {value("direct", psi_H_direct(k, ctx)), value("closed", psi_H_closed(k, ctx))};
      } else if (kind == "psiD") {
        const double t = parse_real(t_text, t_text);
        rec.inputs.emplace_back("t", format_double(t));
        rec.values = {value("direct", psi_D_direct(t, ctx)), value("closed", psi_D_closed(t, ctx)),
                      value("mellin_barnes", psi_D_mellin(t, ctx))};
      } else if (kind == "psiD-special") {
        const cplx t0 = (1.0 - s) / cplx(0.0, 2.0);
        const cplx ratio = psi_D_closed(t0, ctx) * std::sinh(3.141592653589793 * t0) /
                           ((1.0 - s) * std::cosh(3.141592653589793 * t0));
        rec.values = {value("limit", ratio), value("algebraic", psi_D_special(ctx))};
      } else {
        const cplx t = parse_complex(t_text);
        rec.inputs.emplace_back("t", format_complex(t));
        rec.values = {value(kind, kind == "h1" ? h1(t, ctx) : h2(t, ctx))};
      }
    }
    write_record(sink, rec, stamp, g.format);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zagier::cli
