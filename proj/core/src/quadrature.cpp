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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zagier/error.hpp"
#include "zagier/specfun.hpp"

namespace zagier {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Segment {
  double a;
  double b;
  cplx value;
  double error;
  double abs_value;
};

// 21-point Kronrod rule with the QUADPACK error estimate, which scales
// |K - G| against the integrand's variation and floors it at rounding level.
Segment gk21(const Integrand& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  std::array<cplx, 21> fv;
  fv[0] = f(c);
  for (size_t i = 1; i < xk.size(); ++i) {
    const double dx = h * xk[i];
    fv[2 * i - 1] = f(c - dx);
    fv[2 * i] = f(c + dx);
  }
  cplx kron = wk[0] * fv[0];
  cplx gauss = 0.0;
  double res_abs = wk[0] * std::abs(fv[0]);
  for (size_t i = 1; i < xk.size(); ++i) {
    const cplx pair = fv[2 * i - 1] + fv[2 * i];
    kron += wk[i] * pair;
    res_abs += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 1) gauss += wg[i / 2] * pair;
  }
  const cplx mean = 0.5 * kron;
  double res_asc = wk[0] * std::abs(fv[0] - mean);
  for (size_t i = 1; i < xk.size(); ++i) {
    res_asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }
  res_abs *= std::abs(h);
  res_asc *= std::abs(h);
  double err = std::abs((kron - gauss) * h);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return {a, b, kron * h, err, res_abs};
}

EvalResult adaptive_gk(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
  int panels = 1;
  if (spec.panel_width > 0.0) {
    panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / spec.panel_width)));
  }
  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(panels) * 2);
  for (int i = 0; i < panels; ++i) {
    const double a = lo + (hi - lo) * i / panels;
    const double b = (i + 1 == panels) ? hi : lo + (hi - lo) * (i + 1) / panels;
    segs.push_back(gk21(f, a, b));
  }
  auto cmp = [&](size_t x, size_t y) {
    if (segs[x].error != segs[y].error) return segs[x].error < segs[y].error;
    return x > y;
  };
  std::priority_queue<size_t, std::vector<size_t>, decltype(cmp)> heap(cmp);
  cplx total = 0.0;
  double err = 0.0;
  for (size_t i = 0; i < segs.size(); ++i) {
    heap.push(i);
    total += segs[i].value;
    err += segs[i].error;
  }
  double total_abs = 0.0;
  for (const auto& seg : segs) total_abs += seg.abs_value;
  auto target = [&] {
    return std::max({spec.abs_tol, spec.rel_tol * std::abs(total),
                     100.0 * std::numeric_limits<double>::epsilon() * total_abs});
  };
  int splits = 0;
  while (err > target() && !heap.empty()) {
    if (splits >= spec.max_subdivisions) break;
    const size_t i = heap.top();
    heap.pop();
    const Segment s = segs[i];
    const double mid = 0.5 * (s.a + s.b);
    if (!(mid > s.a && mid < s.b)) continue;
    Segment left = gk21(f, s.a, mid);
    Segment right = gk21(f, mid, s.b);
    total += left.value + right.value - s.value;
    err += left.error + right.error - s.error;
    total_abs += left.abs_value + right.abs_value - s.abs_value;
    segs[i] = left;
    segs.push_back(right);
    heap.push(i);
    heap.push(segs.size() - 1);
    ++splits;
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  total = 0.0;
  err = 0.0;
  for (const auto& s : segs) {
    total += s.value;
    err += s.error;
  }
  if (err > target()) {
    throw ToleranceNotMet("adaptive Gauss-Kronrod budget exhausted", total, err);
  }
  return {total, err};
}

EvalResult tanh_sinh(const EndpointIntegrand& f, double lo, double hi, const QuadratureSpec& spec) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kTMax = 6.5;
  constexpr int kMaxLevel = 12;
  const double h = 0.5 * (hi - lo);
  auto node = [&](double t) -> cplx {
    const double u = kHalfPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = h * kHalfPi * std::cosh(t) / (ch * ch);
    if (w == 0.0) return 0.0;
    const double dist = h * 2.0 / (1.0 + std::exp(2.0 * std::abs(u)));
    if (!(dist > 0.0)) return 0.0;
    const double far = (hi - lo) - dist;
    if (t >= 0.0) return w * f(hi - dist, far, dist);
    return w * f(lo + dist, dist, far);
  };
  double step = 1.0;
  cplx sum = node(0.0);
  for (int j = 1; j * step <= kTMax; ++j) sum += node(j * step) + node(-j * step);
  cplx estimate = sum * step;
  double err = std::abs(estimate);
  for (int level = 1; level <= kMaxLevel; ++level) {
    step *= 0.5;
    for (int j = 1; j * step <= kTMax; j += 2) sum += node(j * step) + node(-j * step);
    const cplx next = sum * step;
    err = std::abs(next - estimate);
    estimate = next;
    if (level >= 3 && err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate))) {
      return {estimate, err};
    }
  }
  throw ToleranceNotMet("double exponential quadrature did not converge", estimate, err);
}

}  // namespace

EvalResult integrate_finite(const Integrand& f, double lo, double hi, const QuadratureSpec& spec,
                            Singular singular) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
    throw Error(ErrorKind::kBadParam, "quadrature tolerances must be positive");
  }
  if (hi == lo) return {};
  if (hi < lo) {
    EvalResult r = integrate_finite(f, hi, lo, spec, singular);
    r.value = -r.value;
    return r;
  }
  if (singular != Singular::kNone) {
    return tanh_sinh(
        [&](double x, double, double) -> cplx {
          if (!(x > lo && x < hi)) return 0.0;
          return f(x);
        },
        lo, hi, spec);
  }
  return adaptive_gk(f, lo, hi, spec);
}

EvalResult integrate_endpoint_singular(const EndpointIntegrand& f, double lo, double hi,
                                       const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
    throw Error(ErrorKind::kBadParam, "quadrature tolerances must be positive");
  }
  if (!(hi > lo)) throw Error(ErrorKind::kBadParam, "integration interval must satisfy lo < hi");
  return tanh_sinh(f, lo, hi, spec);
}

EvalResult integrate_semi_infinite(const Integrand& f, double lo, const QuadratureSpec& spec,
                                   const std::optional<Envelope>& envelope) {
  double cutoff = 0.0;
  if (spec.cutoff == QuadratureSpec::Cutoff::kFixed) {
    if (!(spec.fixed_cutoff > lo)) {
      throw Error(ErrorKind::kBadParam, "fixed cutoff must exceed the lower limit");
    }
    cutoff = spec.fixed_cutoff;
  }
  if (!envelope || !envelope->tail) {
    throw Error(ErrorKind::kMissingEnvelope, "semi-infinite integral needs a decay envelope");
  }
  double tail = 0.0;
  if (cutoff == 0.0) {
    cutoff = std::max(1.0, 2.0 * std::abs(lo));
    for (int i = 0; i < 60; ++i) {
      tail = envelope->tail(cutoff);
      if (tail <= 0.5 * spec.abs_tol) break;
      cutoff *= 2.0;
    }
  } else {
    tail = envelope->tail(cutoff);
  }
  if (!(tail <= 0.5 * spec.abs_tol)) {
    throw ToleranceNotMet("envelope tail never drops below tolerance", 0.0, tail);
  }
  QuadratureSpec inner = spec;
  inner.abs_tol = 0.5 * spec.abs_tol;
  EvalResult r = integrate_finite(f, lo, cutoff, inner);
  r.error_estimate += tail;
  return r;
}

}  // namespace zagier
