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

#include "zagier/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "zagier/arith.hpp"
#include "zagier/eisenstein.hpp"
#include "zagier/error.hpp"
#include "zagier/formula.hpp"
#include "zagier/lseries.hpp"
#include "zagier/transforms.hpp"

namespace zagier {
namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

std::string str(double x) { return format_double(x); }
std::string str(cplx z) { return format_complex(z); }
std::string str(i64 x) { return std::to_string(x); }
std::string str(int x) { return std::to_string(x); }

class Collector {
 public:
  explicit Collector(const SuiteOptions& options) : opt_(options) {}

  const SuiteOptions& opt() const { return opt_; }
  const TruncationParams& tp() const { return opt_.tp; }
  bool quick() const { return opt_.quick; }
  double tol(double t) const { return t * opt_.tol_scale; }

  void add(CheckReport r) { out_.push_back(std::move(r)); }

  // Runs one check; an exception becomes a failing report.
  void run(const std::string& name, const std::function<CheckReport()>& f) {
    try {
      CheckReport r = f();
      r.name = name;
      add(std::move(r));
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      add(make_report(name, {}, cplx(nan, nan), cplx(nan, nan), 0.0, tp(), e.what()));
    }
  }
  void run_many(const std::string& name, const std::function<std::vector<CheckReport>()>& f) {
    try {
      for (CheckReport& r : f()) add(std::move(r));
    } catch (const std::exception& e) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      add(make_report(name, {}, cplx(nan, nan), cplx(nan, nan), 0.0, tp(), e.what()));
    }
  }

  CheckReport abs(std::string name, Params p, cplx lhs, cplx rhs, double t, std::string note = {}) const {
    return make_report(std::move(name), std::move(p), lhs, rhs, tol(t), tp(), std::move(note));
  }
  CheckReport rel(std::string name, Params p, cplx lhs, cplx rhs, double t, std::string note = {}) const {
    return make_relative_report(std::move(name), std::move(p), lhs, rhs, tol(t), tp(), std::move(note));
  }

  std::vector<CheckReport> take() { return std::move(out_); }

 private:
  SuiteOptions opt_;
  std::vector<CheckReport> out_;
};

// Tracks the largest |lhs - rhs| over a sweep.
struct Worst {
  double err = -1.0;
  cplx lhs{}, rhs{};
  Params where;
  i64 count = 0;

  void see(cplx l, cplx r, Params at) {
    ++count;
    const double e = std::abs(l - r);
    if (e > err || std::isnan(e)) {
      err = e;
      lhs = l;
      rhs = r;
      where = std::move(at);
    }
  }
  // Same, on the relative scale.
  void see_rel(cplx l, cplx r, Params at) {
    ++count;
    const double scale = std::max(std::abs(l), std::abs(r));
    const double e = scale > 0.0 ? std::abs(l - r) / scale : 0.0;
    if (e > err || std::isnan(e)) {
      err = e;
      lhs = l;
      rhs = r;
      where = std::move(at);
    }
  }
  Params params(Params head) const {
    head.emplace_back("checked", str(count));
    for (auto& kv : where) head.push_back(kv);
    return head;
  }
};

// ---------------------------------------------------------------- gauss

void gauss_suite(Collector& c) {
  const i64 q_max = c.quick() ? 60 : 200;
  const i64 n_max = 50;
  for (i64 q = 1; q <= q_max; ++q) {
    const std::string name = fmt::format("gauss.closed_vs_brute.q={:03}", q);
    c.run(name, [&] {
      Worst w;
      for (i64 a = 1; a <= q; ++a) {
        if (gcd(a, q) != 1) continue;
        for (i64 n = 0; n <= n_max; ++n) {
          w.see(gauss_quadratic_closed(a, n, q).value, gauss_quadratic_brute(a, n, q).value,
                {{"a", str(a)}, {"n", str(n)}});
        }
      }
      return c.abs(name, w.params({{"q", str(q)}}), w.lhs, w.rhs, 1e-9);
    });
    const std::string sq = fmt::format("gauss.square.q={:03}", q);
    c.run(sq, [&] {
      Worst w;
      for (i64 a = 1; a <= q; ++a) {
        if (gcd(a, q) != 1) continue;
        const cplx g = gauss_quadratic_brute(a, 0, q).value;
        cplx expect = 0.0;
        if (q % 2 == 1) expect = static_cast<double>(q * chi4(q));
        if (q % 4 == 0) expect = 2.0 * static_cast<double>(q) * kI * static_cast<double>(chi4(a));
        w.see(g * g, expect, {{"a", str(a)}});
      }
      return c.abs(sq, w.params({{"q", str(q)}}), w.lhs, w.rhs, 1e-9);
    });
    if (q % 4 == 0) {
      const std::string cs = fmt::format("gauss.char_sum.q={:03}", q);
      c.run(cs, [&] {
        Worst w;
        for (i64 m = 0; m <= n_max; ++m) {
          w.see(gauss_char_sum(m, q, 0).value, gauss_char_sum_brute(m, q).value, {{"m", str(m)}});
        }
        return c.abs(cs, w.params({{"q", str(q)}}), w.lhs, w.rhs, 1e-9);
      });
    }
  }
  struct Example {
    const char* name;
    std::function<cplx()> f;
    cplx expect;
  };
  const std::vector<Example> examples = {
      {"gauss.example.G(1,0;4)", [] { return gauss_quadratic_brute(1, 0, 4).value; }, {2.0, 2.0}},
      {"gauss.example.G(1,0;2)", [] { return gauss_quadratic_brute(1, 0, 2).value; }, 0.0},
      {"gauss.example.G(1,0;1)", [] { return gauss_quadratic_brute(1, 0, 1).value; }, 1.0},
      {"gauss.example.G(1,1;4)", [] { return gauss_quadratic_closed(1, 1, 4).value; }, 0.0},
      {"gauss.example.G(1,2;6)", [] { return gauss_quadratic_closed(1, 2, 6).value; }, 0.0},
      {"gauss.example.g(1;4)", [] { return gauss_char_sum(1, 4).value; }, {0.0, 2.0}},
      {"gauss.example.g(0;4)", [] { return gauss_char_sum(0, 4).value; }, 0.0},
  };
  for (const Example& e : examples) {
    c.run(e.name, [&] { return c.abs(e.name, {}, e.f(), e.expect, 1e-12); });
  }
}

// ---------------------------------------------------------- kloosterman

void kloosterman_suite(Collector& c) {
  const i64 q_max = c.quick() ? 60 : 150;
  const i64 nl_max = 12;
  Worst zero_even, zero_odd, zero_mixed;
  double closed_nonzero = 0.0;
  for (i64 q = 1; q <= q_max; ++q) {
    const std::string name = fmt::format("kloosterman.K.q={:03}", q);
    c.run(name, [&] {
      Worst w, sym;
      for (i64 n = 0; n <= nl_max; ++n) {
        for (i64 l = 0; l <= nl_max; ++l) {
          const ExpSum brute = K_brute(n, l, q);
          const ExpSum closed = K_closed(n, l, q);
          const Params at = {{"n", str(n)}, {"l", str(l)}};
          w.see(closed.value, brute.value, at);
          if (l > n) sym.see(brute.value, K_brute(l, n, q).value, at);
          Worst* zero = nullptr;
          if (q % 4 == 2 && n % 2 == 0 && l % 2 == 0) zero = &zero_even;
          if (q % 4 == 0 && n % 2 == 1 && l % 2 == 1) zero = &zero_odd;
          if (q % 2 == 0 && (n + l) % 2 == 1) zero = &zero_mixed;
          if (zero != nullptr) {
            zero->see(brute.value, 0.0, {{"q", str(q)}, {"n", str(n)}, {"l", str(l)}});
            closed_nonzero = std::max(closed_nonzero, std::abs(closed.value));
          }
        }
      }
      if (q > 1) {
        c.add(c.abs(fmt::format("kloosterman.K_symmetry.q={:03}", q), sym.params({{"q", str(q)}}),
                    sym.lhs, sym.rhs, 1e-10));
      }
      return c.abs(name, w.params({{"q", str(q)}}), w.lhs, w.rhs, 1e-8);
    });
  }
  const std::pair<const char*, Worst*> zeros[] = {{"q2mod4_all_even", &zero_even},
                                                  {"q0mod4_all_odd", &zero_odd},
                                                  {"q_even_mixed_parity", &zero_mixed}};
  for (const auto& [label, w] : zeros) {
    c.add(c.abs(std::string("kloosterman.K_zero.") + label, w->params({}), w->lhs, 0.0, 1e-8,
                "brute force against the exact zero"));
  }
  c.add(c.abs("kloosterman.K_zero.closed_exact", {}, closed_nonzero, 0.0, 0.0,
              "closed forms return exactly zero in all three cases"));

  // Ramanujan sums, unit form against divisor form, in blocks of 50 moduli.
  const i64 c_max = c.quick() ? 100 : 500, m_max = c.quick() ? 100 : 500;
  for (i64 lo = 1; lo <= c_max; lo += 50) {
    const i64 hi = std::min(c_max, lo + 49);
    const std::string name = fmt::format("kloosterman.ramanujan.C={:03}-{:03}", lo, hi);
    c.run(name, [&] {
      Worst w;
      for (i64 C = lo; C <= hi; ++C) {
        for (i64 m = -m_max; m <= m_max; ++m) {
          w.see(static_cast<double>(ramanujan_sum_units(m, C)),
                static_cast<double>(ramanujan_sum_divisors(m, C)), {{"C", str(C)}, {"m", str(m)}});
        }
      }
      return c.abs(name, w.params({}), w.lhs, w.rhs, 0.0);
    });
  }
  // b_q(D) by enumeration against the product of local square-root counts.
  const i64 bq_max = c.quick() ? 40 : 100;
  for (i64 lo = 1; lo <= bq_max; lo += 25) {
    const i64 hi = std::min(bq_max, lo + 24);
    const std::string name = fmt::format("kloosterman.b_count.q={:03}-{:03}", lo, hi);
    c.run(name, [&] {
      Worst w;
      for (i64 q = lo; q <= hi; ++q) {
        for (i64 n = 0; n <= 12; ++n) {
          for (i64 l = 0; l <= 12; ++l) {
            const i64 D = n * n - 4 * l * l;
            w.see(static_cast<double>(b_count(q, D)), static_cast<double>(b_count_local(q, D)),
                  {{"q", str(q)}, {"D", str(D)}});
          }
        }
      }
      return c.abs(name, w.params({}), w.lhs, w.rhs, 0.0);
    });
  }

  const Character chi4_level(4);
  c.run("kloosterman.example.S(1,1;2)", [&] {
    return c.abs("kloosterman.example.S(1,1;2)", {}, kloosterman(1, 1, 2), 1.0, 1e-12);
  });
  c.run("kloosterman.example.S(0,0;5)", [&] {
    return c.abs("kloosterman.example.S(0,0;5)", {}, kloosterman(0, 0, 5), 4.0, 1e-12);
  });
  c.run("kloosterman.example.S(1,1;5)", [&] {
    return c.abs("kloosterman.example.S(1,1;5)", {}, kloosterman(1, 1, 5),
                 2.0 + 2.0 * std::cos(4.0 * kPi / 5.0), 1e-12);
  });
  c.run("kloosterman.example.S_inf_inf(0,0;4)", [&] {
    return c.abs("kloosterman.example.S_inf_inf(0,0;4)", {},
                 kloosterman_inf_inf(0, 0, 4, chi4_level).value, 0.0, 1e-12);
  });
  c.run("kloosterman.example.S_inf_0(1,1;3)", [&] {
    return c.abs("kloosterman.example.S_inf_0(1,1;3)", {},
                 kloosterman_inf_zero(1, 1, 3, chi4_level).value, -kloosterman(1, 1, 3), 1e-12);
  });
  c.run("kloosterman.example.K(1,0;2)", [&] {
    return c.abs("kloosterman.example.K(1,0;2)", {}, K_closed(1, 0, 2).value, 0.0, 1e-12);
  });
  c.run("kloosterman.example.K(1,2;6)", [&] {
    return c.abs("kloosterman.example.K(1,2;6)", {}, K_closed(1, 2, 6).value, 0.0, 1e-12);
  });
  c.run("kloosterman.example.K(1,1;6)", [&] {
    return c.abs("kloosterman.example.K(1,1;6)", {}, K_closed(1, 1, 6).value,
                 -12.0 * kloosterman(2, 2, 3), 1e-10);
  });
}

// -------------------------------------------------------------- divisor

void divisor_suite(Collector& c) {
  const std::vector<cplx> us = {-2.0, -1.0, -0.5, 0.0, 0.3, 1.0, 2.0, {0.25, 0.7}, {-1.5, 0.4}, {2.0, -1.1}};
  const int n_max = c.quick() ? 31 : 99;
  for (int n = 1; n <= n_max; n += 2) {
    const std::string name = fmt::format("divisor.twist.n={:02}", n);
    c.run(name, [&] {
      Worst w;
      for (const cplx u : us) {
        const cplx lhs = sigma_twisted_square(0.5 - u, n);
        const cplx rhs = std::exp((1.0 - 2.0 * u) * std::log(static_cast<double>(n))) *
                         sigma_twisted_square(-0.5 + u, n);
        w.see_rel(lhs, rhs, {{"u", str(u)}});
      }
      return c.rel(name, w.params({{"n", str(n)}}), w.lhs, w.rhs, 1e-10);
    });
  }

  const i64 terms = 100000;
  const std::pair<cplx, cplx> zs[] = {{{3.5, 0.7}, {0.6, 0.3}}, {4.0, 0.5}, {3.0, 0.0}};
  for (const auto& [z, s] : zs) {
    const std::string name = "divisor.Z.z=" + str(z) + ".s=" + str(s);
    c.run(name, [&] {
      const SeriesValue tr = Z_truncated(z, s, terms);
      return c.rel(name, {{"z", str(z)}, {"s", str(s)}, {"terms", str(terms)}}, tr.value, Z_closed(z, s),
                   1e-5);
    });
  }
  c.run("divisor.Z.s=0_specialization", [&] {
    const cplx z = 3.0;
    const cplx special = (1.0 - std::pow(2.0, -z)) / (1.0 - std::pow(2.0, -2.0 * z)) * L_chi4(z) *
                         zeta(z) * zeta(z) / zeta(2.0 * z);
    return c.rel("divisor.Z.s=0_specialization", {{"z", "3"}}, Z_truncated(z, 0.0, terms).value, special,
                 1e-6);
  });

  // Examples of the divisor sums themselves.
  c.run("divisor.example.sigma(s;2^6)", [&] {
    return c.abs("divisor.example.sigma(s;2^6)", {}, sigma_twisted({0.3, 1.7}, 64), 1.0, 1e-14);
  });
  c.run("divisor.example.sigma(0;9)", [&] {
    return c.abs("divisor.example.sigma(0;9)", {}, sigma_twisted(0.0, 9), 1.0, 1e-14);
  });
  c.run("divisor.example.sigma'(0;9)", [&] {
    return c.abs("divisor.example.sigma'(0;9)", {}, sigma_twisted_deriv(0.0, 9), std::log(3.0), 1e-14);
  });
  c.run("divisor.example.sigma'(s;4)", [&] {
    return c.abs("divisor.example.sigma'(s;4)", {}, sigma_twisted_deriv({0.4, 0.2}, 4), 0.0, 1e-14);
  });

  // The Zagier series in its convergent range.
  c.run("divisor.zagier_L.D=2", [&] {
    return c.abs("divisor.zagier_L.D=2", {{"s", "2.5"}}, zagier_L(2, 2.5, 2000).value, 0.0, 0.0,
                 "no square is 2 mod 4");
  });
  const i64 q_half = c.quick() ? 1000 : 5000;
  const std::pair<i64, double> stable[] = {{1, 2.5}, {5, 2.5}, {-4, 2.5}, {-12, 2.5}, {20, 3.0}, {12, 2.5}};
  for (const auto& [D, s] : stable) {
    const std::string name = fmt::format("divisor.zagier_L.doubling.D={}.s={}", D, str(s));
    c.run(name, [&] {
      const SeriesValue a = zagier_L(D, s, q_half), b = zagier_L(D, s, 2 * q_half);
      return c.rel(name, {{"D", str(D)}, {"s", str(s)}, {"Q", str(q_half)}}, a.value, b.value, 1e-5,
                   "Q against 2Q");
    });
  }
  c.run("divisor.b_count.nonresidues", [&] {
    double worst = 0.0;
    for (i64 q = 1; q <= 200; ++q) {
      for (i64 D = -50; D <= 50; ++D) {
        if (mod(D, 4) == 2 || mod(D, 4) == 3) worst = std::max(worst, static_cast<double>(b_count(q, D)));
      }
    }
    return c.abs("divisor.b_count.nonresidues", {{"q_max", "200"}, {"D", "-50..50, D = 2,3 mod 4"}}, worst,
                 0.0, 0.0);
  });

  const double catalan = 0.915965594177219015054603514932;
  c.run("divisor.scalars.s(1)", [&] {
    const cplx s(0.7, 0.3);
    return c.rel("divisor.scalars.s(1)", {{"s", str(s)}}, s_scalar(1, s), 1.0 / L_chi4(2.0 * s), 1e-13);
  });
  c.run("divisor.scalars.s(4)", [&] {
    const cplx s(0.7, 0.3);
    return c.rel("divisor.scalars.s(4)", {{"s", str(s)}}, s_scalar(4, s), 1.0 / L_chi4(2.0 * s), 1e-13);
  });
  c.run("divisor.scalars.s(3)", [&] {
    return c.rel("divisor.scalars.s(3)", {{"s", "1"}}, s_scalar(3, 1.0), (2.0 / 3.0) / catalan, 1e-12);
  });
  c.run("divisor.scalars.t(1)", [&] {
    const cplx s(0.7, 0.3);
    return c.rel("divisor.scalars.t(1)", {{"s", str(s)}}, t_scalar(1, s), 2.0 * kI / L_chi4(2.0 * s), 1e-13);
  });
  c.run("divisor.scalars.t(2)", [&] {
    return c.rel("divisor.scalars.t(2)", {{"s", "1"}}, t_scalar(2, 1.0), kI / catalan, 1e-12);
  });
  c.run("divisor.scalars.t(9)/s(9)", [&] {
    // For odd square m the two divisor sums are related by the twist identity,
    // which makes t(m) = 2i s(m).
    const cplx s = 0.7;
    return c.rel("divisor.scalars.t(9)/s(9)", {{"s", "0.7"}}, t_scalar(9, s) / s_scalar(9, s), 2.0 * kI, 1e-10);
  });
}

// ----------------------------------------------------------- eisenstein

// The brute-force sum for m divisible by 2^k converges like the m = 1 sum
// truncated at C_max / 2^k, so C_max grows with the 2-part of m past 8.
i64 brute_C_max(i64 C_max, i64 m) {
  i64 two = 1;
  while (m % 2 == 0) {
    m /= 2;
    two *= 2;
  }
  return C_max * std::max<i64>(1, two / 8);
}

void eisenstein_suite(Collector& c) {
  const std::pair<int, int> counts[] = {{4, 3}, {16, 6}, {64, 12}};
  const std::pair<int, int> singular[] = {{4, 2}, {16, 6}, {64, 12}};
  for (const auto& [N, expect] : counts) {
    const std::string name = fmt::format("eisenstein.cusps.N={:02}", N);
    c.run(name, [&] {
      std::string labels;
      for (const Cusp& x : enumerate_cusps(N)) labels += (labels.empty() ? "" : " ") + x.label();
      return c.abs(name, {{"N", str(N)}, {"cusps", labels}},
                   static_cast<double>(enumerate_cusps(N).size()), static_cast<double>(expect), 0.0);
    });
  }
  for (const auto& [N, expect] : singular) {
    const std::string name = fmt::format("eisenstein.singular.N={:02}", N);
    c.run(name, [&] {
      int k = 0;
      for (const Cusp& x : enumerate_cusps(N)) k += is_singular(x) ? 1 : 0;
      return c.abs(name, {{"N", str(N)}}, static_cast<double>(k), static_cast<double>(expect), 0.0);
    });
  }

  const i64 m_max = c.quick() ? 6 : 20;
  const std::vector<cplx> ss = {1.2, {1.5, 0.4}};
  // Exact zeros of the tables come out of the brute-force sums as phase
  // cancellation at rounding level.
  constexpr double kZero = 1e-14;
  for (int N : {4, 16, 64}) {
    for (const Cusp& cusp : enumerate_cusps(N)) {
      if (!is_singular(cusp)) continue;
      for (const cplx s : ss) {
        const PhiScalars scalars(s);
        for (i64 m = 1; m <= m_max; ++m) {
          const std::string name =
              fmt::format("eisenstein.phi.N={:02}.c={}.s={}.m={:02}", N, cusp.label(), str(s), m);
          c.run(name, [&] {
            const i64 C = brute_C_max(c.tp().C_max, m);
            const cplx closed = phi_closed(EisCusp::kInfinity, cusp, m, scalars).value;
            const SeriesValue brute = phi_bruteforce_inf(cusp, m, s, C);
            const Params p = {{"N", str(N)},           {"cusp", cusp.label()},
                              {"s", str(s)},           {"m", str(m)},
                              {"C_max", str(C)},       {"tail_bound", str(brute.tail_bound)}};
            if (std::abs(closed) < kZero) {
              return c.abs(name, p, brute.value, closed, 1e-12, "table value vanishes");
            }
            return c.rel(name, p, brute.value, closed, 1e-5);
          });
        }
      }
    }
  }

  // Coefficients at squares that vanish.
  const std::pair<int, i64> vanish[] = {{64, 32}, {16, 8}};
  for (const auto& [N, w] : vanish) {
    const Cusp cusp = find_cusp(N, w);
    for (i64 m = 1; m <= 10; ++m) {
      const std::string name = fmt::format("eisenstein.square_zero.N={:02}.c={}.m={:02}", N, cusp.label(), m);
      c.run(name, [&] {
        const cplx s = 1.2;
        const cplx closed = phi_closed(EisCusp::kInfinity, cusp, m * m, s).value;
        const SeriesValue brute = phi_bruteforce_inf(cusp, m * m, s, brute_C_max(c.tp().C_max, m * m));
        return c.abs(name, {{"N", str(N)}, {"cusp", cusp.label()}, {"m^2", str(m * m)}, {"closed", str(closed)}},
                     brute.value, 0.0, 1e-12, "closed and brute force both vanish");
      });
    }
  }
  c.run("eisenstein.delta.N=64.closed", [&] {
    const Cusp inf = find_cusp(64, 64);
    double worst = 0.0;
    for (i64 m = 1; m <= 64; ++m) {
      if (m % 16 != 0) worst = std::max(worst, std::abs(phi_closed(EisCusp::kInfinity, inf, m, 1.2).value));
    }
    return c.abs("eisenstein.delta.N=64.closed", {{"m", "1..64, 16 does not divide m"}}, worst, 0.0, 0.0);
  });

  for (int N : {4, 16, 64}) {
    for (i64 m : {3, 4, 7}) {
      for (const cplx s : {cplx(1.3), cplx(1.5, 0.2)}) {
        c.run_many(fmt::format("eisenstein.symmetry.N={:02}.m={}", N, m),
                   [&] { return phi_symmetry_check(N, m, s, c.tol(1e-12)); });
      }
    }
  }
}

// ----------------------------------------------------------- transforms

void transforms_suite(Collector& c) {
  const TestFunction bump(1.0, 3.0);
  const QuadratureSpec quad = c.tp().quad;
  std::vector<int> ns = {4, 10}, ks = {3, 5, 7};
  std::vector<double> svals = {0.6, 1.2}, ts = {0.5, 1.0, 2.0};
  if (c.quick()) {
    ns = {4};
    ks = {3};
    ts = {1.0};
  }
  for (int n : ns) {
    for (double s : svals) {
      const TransformContext ctx{n, s, bump, quad};
      for (int k : ks) {
        const std::string name = fmt::format("transforms.psi_H.n={:02}.s={}.k={}", n, str(s), k);
        c.run(name, [&] {
          return c.rel(name, {{"n", str(n)}, {"s", str(s)}, {"k", str(k)}}, psi_H_direct(k, ctx),
                       psi_H_closed(k, ctx), 1e-6);
        });
      }
      for (double t : ts) {
        const std::string name = fmt::format("transforms.psi_D.n={:02}.s={}.t={}", n, str(s), str(t));
        c.run(name, [&] {
          return c.rel(name, {{"n", str(n)}, {"s", str(s)}, {"t", str(t)}}, psi_D_direct(t, ctx),
                       psi_D_closed(t, ctx), 1e-6);
        });
      }
    }
  }
  {
    const TransformContext ctx{4, 0.8, bump, quad};
    const PsiDMellin mellin(ctx);
    for (double t : {0.0, 0.5, 2.0, 6.0}) {
      const std::string name = fmt::format("transforms.psi_D_mellin.n=04.s=0.8.t={}", str(t));
      c.run(name, [&] {
        return c.abs(name, {{"n", "4"}, {"s", "0.8"}, {"t", str(t)}}, mellin(t), psi_D_closed(t, ctx), 1e-8);
      });
    }
    c.run("transforms.psi_D.even", [&] {
      return c.abs("transforms.psi_D.even", {{"n", "4"}, {"s", "0.8"}, {"t", "1.3"}}, psi_D_closed(1.3, ctx),
                   psi_D_closed(-1.3, ctx), 1e-10);
    });
  }

  // The cosine and Mellin-Barnes forms of the kernel.
  {
    const TransformContext ctx{10, 2.5, bump, quad};
    for (double x : {0.5, 1.0, 2.0, 3.5, 5.0}) {
      const std::string name = fmt::format("transforms.psi_kernel_vs_contour.x={}", str(x));
      c.run(name, [&] {
        return c.abs(name, {{"n", "10"}, {"s", "2.5"}, {"x", str(x)}, {"a_line", "-0.5"}}, psi_kernel(x, ctx),
                     psi_contour(x, ctx, -0.5), 1e-7);
      });
    }
    c.run("transforms.psi_contour.line_shift", [&] {
      return c.abs("transforms.psi_contour.line_shift", {{"x", "2"}, {"a_line", "-0.5 vs -1.5"}},
                   psi_contour(2.0, ctx, -0.5), psi_contour(2.0, ctx, -1.5), 1e-8);
    });
    c.run("transforms.psi_kernel.scaling", [&] {
      const TransformContext big{20, 2.5, bump, quad};
      return c.abs("transforms.psi_kernel.scaling", {{"x/n", "2/10 vs 4/20"}}, psi_kernel(2.0, ctx),
                   psi_kernel(4.0, big), 1e-10);
    });
  }

  // Special values of h1, h2 and psi_D at t0 = (1-s)/(2i).
  struct Set {
    int n;
    double s;
  };
  const std::vector<Set> h1_sets = {{4, 0.8}, {3, 0.7}, {5, 0.9}, {4, 0.6}};
  const std::vector<Set> h2_sets = {{8, 0.8}, {4, 0.8}, {3, 0.7}, {5, 0.65}};
  for (const Set& p : h1_sets) {
    const TransformContext ctx{p.n, p.s, bump, quad};
    const Params at = {{"n", str(p.n)}, {"s", str(p.s)}};
    const std::string base = fmt::format("transforms.h1.n={}.s={}", p.n, str(p.s));
    c.run(base + ".zero", [&] {
      return c.abs(base + ".zero", at, h1((1.0 - p.s) / (2.0 * kI), ctx), 0.0, 1e-12);
    });
    c.run(base + ".special", [&] {
      const cplx s = p.s;
      const cplx rhs = gamma(s - 0.5) * std::sin(kPi * p.s) / kPi * std::pow(0.5 * p.n, p.s - 1.0) *
                       algebraic_integral_above(ctx);
      return c.abs(base + ".special", at, h1((s - 1.0) / (2.0 * kI), ctx), rhs, 1e-7);
    });
  }
  for (const Set& p : h2_sets) {
    const TransformContext ctx{p.n, p.s, bump, quad};
    const Params at = {{"n", str(p.n)}, {"s", str(p.s)}};
    for (const double sign : {1.0, -1.0}) {
      const std::string name =
          fmt::format("transforms.h2.n={}.s={}.{}", p.n, str(p.s), sign > 0 ? "plus" : "minus");
      c.run(name, [&] {
        const double sn = std::sin(0.5 * kPi * p.s);
        const cplx rhs = 2.0 / kPi * sn * sn * gamma(cplx(p.s - 0.5)) * std::pow(0.5 * p.n, p.s - 1.0) *
                         algebraic_integral_below(ctx);
        return c.abs(name, at, h2(sign * (1.0 - p.s) / (2.0 * kI), ctx), rhs, 1e-7);
      });
    }
  }
  for (const Set& p : std::vector<Set>{{4, 0.8}, {3, 0.7}, {10, 0.6}}) {
    const std::string name = fmt::format("transforms.psi_D_special.n={:02}.s={}", p.n, str(p.s));
    c.run(name, [&] {
      const TransformContext ctx{p.n, p.s, bump, quad};
      const cplx t0 = (1.0 - p.s) / (2.0 * kI);
      const cplx lhs = psi_D_closed(t0, ctx) * std::sinh(kPi * t0) / ((1.0 - p.s) * std::cosh(kPi * t0));
      return c.abs(name, {{"n", str(p.n)}, {"s", str(p.s)}}, lhs, psi_D_special(ctx), 1e-7);
    });
  }

  // Linearity in omega.
  c.run("transforms.linearity.psi_H_scaled", [&] {
    const TransformContext one{10, 0.6, bump, quad}, two{10, 0.6, bump.scaled(2.0), quad};
    return c.abs("transforms.linearity.psi_H_scaled", {{"k", "5"}}, psi_H_closed(5, two),
                 2.0 * psi_H_closed(5, one), 1e-10);
  });
  c.run("transforms.linearity.psi_D_sum", [&] {
    const TestFunction other(2.0, 3.5);
    const TransformContext a{4, 0.8, bump, quad}, b{4, 0.8, other, quad},
        ab{4, 0.8, TestFunction::Sum(bump, other), quad};
    return c.abs("transforms.linearity.psi_D_sum", {{"t", "0.7"}}, psi_D_closed(0.7, ab),
                 psi_D_closed(0.7, a) + psi_D_closed(0.7, b), 1e-10);
  });
  c.run("transforms.linearity.psi_D_special", [&] {
    const TransformContext one{4, 0.8, bump, quad}, two{4, 0.8, bump.scaled(2.0), quad};
    return c.abs("transforms.linearity.psi_D_special", {}, psi_D_special(two), 2.0 * psi_D_special(one), 1e-12);
  });
  c.run("transforms.mellin.alpha=2", [&] {
    // Midpoint rule on the bump, spectrally accurate for a C^inf compact weight.
    const int m = 4000;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      const double y = 1.0 + 2.0 * (i + 0.5) / m;
      acc += y * bump(y) * 2.0 / m;
    }
    return c.abs("transforms.mellin.alpha=2", {}, mellin_omega(2.0, bump, quad), acc, 1e-10);
  });
}

// -------------------------------------------------------- decomposition

void decomposition_suite(Collector& c) {
  const cplx s = c.opt().s.value_or(2.5);
  const std::vector<int> ns = c.opt().n ? std::vector<int>{*c.opt().n} : std::vector<int>{4, 3};
  const TestFunction bump(1.0, 3.0);
  for (int n : ns) {
    const std::string base = fmt::format("decomposition.n={}", n);
    // The error at Q changes sign for some n, so single doublings are not
    // monotone; the ladder compares the two finest levels with the two coarsest.
    std::vector<double> errs;
    c.run(base, [&] {
      CheckReport r = decomposition_check(n, s, bump, c.tp(), c.tol(1e-3));
      for (i64 div : {8, 4, 2}) {
        TruncationParams coarse = c.tp();
        coarse.Q_max = std::max<i64>(1, c.tp().Q_max / div);
        errs.push_back(decomposition_check(n, s, bump, coarse, 1.0).rel_err);
      }
      errs.push_back(r.rel_err);
      return r;
    });
    c.run(base + ".doubling", [&] {
      if (errs.size() != 4) throw Error(ErrorKind::kBadParam, "no error ladder");
      Params p = {{"n", str(n)}, {"s", str(s)}};
      for (std::size_t i = 0; i < errs.size(); ++i) {
        p.emplace_back(i == 3 ? std::string("rel_err(Q)") : fmt::format("rel_err(Q/{})", 8 >> i), str(errs[i]));
      }
      return make_report(base + ".doubling", std::move(p), std::max(errs[2], errs[3]), 0.0,
                         std::max(errs[0], errs[1]), c.tp(),
                         "max error over Q/2, Q against max error over Q/8, Q/4");
    });
  }
  if (!c.opt().n) {
    c.run("decomposition.empty_support", [&] {
      return decomposition_check(4, s, TestFunction(2.2, 2.8), c.tp(), c.tol(1e-3));
    });
  }
  const i64 q_diag = c.quick() ? 4000 : 20000;
  for (int n : c.opt().n ? ns : std::vector<int>{4, 3, 2}) {
    const std::string name = fmt::format("decomposition.diagonal.n={}", n);
    c.run(name, [&] {
      const cplx closed = n % 2 == 0 ? M_D_even(n, s, bump, c.tp().quad) : M_D_odd(n, s, bump, c.tp().quad);
      return c.rel(name, {{"n", str(n)}, {"s", str(s)}, {"Q", str(q_diag)}},
                   M_D_brute(n, s, bump, q_diag, c.tp().quad), closed, 1e-4);
    });
  }
}

// ----------------------------------------------------------------- dual

void dual_suite(Collector& c) {
  const cplx s = c.opt().s.value_or(2.5);
  const std::vector<int> ns = c.opt().n ? std::vector<int>{*c.opt().n} : std::vector<int>{4, 3};
  for (int n : ns) {
    c.run(fmt::format("dual.n={}", n), [&] {
      return dual_decomposition_check(n, s, c.tp(), TestFunction(1.0, 3.0), c.tol(1e-4));
    });
  }
  struct Set {
    int N;
    EisCusp b;
    i64 step;
    i64 offset;
  };
  // gamma = step * q with q odd.
  const Set sets[] = {{4, EisCusp::kZero, 2, 0}, {16, EisCusp::kZero, 4, 0}, {64, EisCusp::kZero, 8, 0}};
  for (const Set& set : sets) {
    const std::string name = fmt::format("dual.moduli.N={:02}", set.N);
    c.run(name, [&] {
      std::vector<i64> expect;
      for (i64 q = 1; set.step * q <= 400; q += 2) expect.push_back(set.step * q);
      const bool same = allowed_moduli(set.N, set.b, 400) == expect;
      return c.abs(name, {{"N", str(set.N)}, {"gamma_max", "400"}}, same ? 0.0 : 1.0, 0.0, 0.0);
    });
  }
  c.run("dual.moduli.N=04.inf", [&] {
    std::vector<i64> expect;
    for (i64 g = 4; g <= 400; g += 4) expect.push_back(g);
    const bool same = allowed_moduli(4, EisCusp::kInfinity, 400) == expect;
    return c.abs("dual.moduli.N=04.inf", {{"gamma_max", "400"}}, same ? 0.0 : 1.0, 0.0, 0.0);
  });
}

// ----------------------------------------------------------- continuous

void continuous_suite(Collector& c) {
  std::vector<std::pair<cplx, double>> points = {{1.5, 0.7}, {1.8, 1.3}};
  if (c.opt().s || c.opt().t) points = {{c.opt().s.value_or(1.5), c.opt().t.value_or(0.7)}};
  const int even_n = c.opt().n && *c.opt().n % 2 == 0 ? *c.opt().n : 4;
  const int odd_n = c.opt().n && *c.opt().n % 2 == 1 ? *c.opt().n : 3;
  const bool do_even = !c.opt().n || *c.opt().n % 2 == 0;
  const bool do_odd = !c.opt().n || *c.opt().n % 2 == 1;
  for (const auto& [s, t] : points) {
    for (ContCase cc : {ContCase::kEvenInfInf, ContCase::kEvenInfZeroPair, ContCase::kOdd64, ContCase::kOdd16}) {
      const bool even = cc == ContCase::kEvenInfInf || cc == ContCase::kEvenInfZeroPair;
      if (even ? !do_even : !do_odd) continue;
      const int n = even ? even_n : odd_n;
      c.run(fmt::format("continuous.{}.s={}.t={}", ContCaseName(cc), str(s), str(t)),
            [&] { return cont_sum_identity(cc, s, t, n, c.tp(), c.tol(1e-5)); });
    }
    if (do_even) {
      c.run(fmt::format("continuous.combined.even.s={}.t={}", str(s), str(t)),
            [&] { return combined_cont_check(s, t, even_n, c.tp(), c.tol(1e-5)); });
    }
    if (do_odd) {
      c.run(fmt::format("continuous.combined.odd.s={}.t={}", str(s), str(t)),
            [&] { return combined_cont_check(s, t, odd_n, c.tp(), c.tol(1e-5)); });
    }
  }
  if (!c.opt().t) {
    if (do_even) {
      c.run(fmt::format("continuous.combined.even.s={}.t=0", str(points.front().first)),
            [&] { return combined_cont_check(points.front().first, 0.0, even_n, c.tp(), c.tol(1e-5)); });
    }
    if (do_odd) {
      c.run(fmt::format("continuous.combined.odd.s={}.t=0", str(points.front().first)),
            [&] { return combined_cont_check(points.front().first, 0.0, odd_n, c.tp(), c.tol(1e-5)); });
    }
  }
  c.run_many("continuous.roots", [] { return root_of_unity_checks(); });
}

// -------------------------------------------------------------- central

void central_suite(Collector& c) {
  const TestFunction bump(1.0, 3.0);
  const std::vector<double> u_steps = {1e-2, 5e-3, 1e-3};
  std::vector<int> ns = c.opt().n ? std::vector<int>{*c.opt().n} : std::vector<int>{4, 3, 1};
  for (int n : ns) {
    c.run(fmt::format("central.n={}", n), [&] {
      return n % 2 == 0 ? central_point_even(n, bump, u_steps, {1e-13, 1e-13}, c.tol(1e-5))
                        : central_point_odd(n, bump, u_steps, {1e-13, 1e-13}, c.tol(1e-5));
    });
    if (n == 1) continue;
    c.run(fmt::format("central.pole_cancellation.n={}", n),
          [&] { return central_pole_cancellation(n, bump, {1e-2, 1e-3}); });
    const std::string name = fmt::format("central.gamma_sensitivity.n={}", n);
    c.run(name, [&] {
      const double g = std::numbers::egamma, dg = 1e-6;
      const QuadratureSpec quad{1e-13, 1e-13};
      const cplx shift = central_point_closed(n, bump, quad, g + dg) - central_point_closed(n, bump, quad, g);
      cplx head = sigma_twisted_square(-0.5, n);
      if (n % 2 == 0) head += sigma_twisted_square(0.5, n) / static_cast<double>(n);
      const cplx expect = 3.0 * dg * mellin_omega(1.0, bump, quad) * head / (2.0 * L_chi4(1.5));
      return c.rel(name, {{"n", str(n)}, {"delta_gamma", "1e-06"}}, shift, expect, 1e-6);
    });
  }
}

using SuiteFn = void (*)(Collector&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"gauss", gauss_suite},           {"kloosterman", kloosterman_suite}, {"divisor", divisor_suite},
      {"eisenstein", eisenstein_suite}, {"transforms", transforms_suite},   {"decomposition", decomposition_suite},
      {"dual", dual_suite},       {"continuous", continuous_suite},   {"central", central_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite(name)) throw Error(ErrorKind::kBadParam, "unknown suite '" + name + "'");
  options.tp.validate();
  if (!(options.tol_scale > 0.0)) throw Error(ErrorKind::kBadParam, "tol_scale must be positive");
  Collector c(options);
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) fn(c);
  }
  std::vector<CheckReport> out = c.take();
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace zagier
