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


#include "zagier/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "zagier/error.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

double bump_value(const Bump& b, double y) {
  if (!(y > b.a1 && y < b.a2)) return 0.0;
  const double u = (2.0 * y - b.a1 - b.a2) / (b.a2 - b.a1);
  const double v = (1.0 - u) * (1.0 + u);
  return b.scale * std::exp(-1.0 / v);
}

// Taylor coefficients of exp(-1/(1-u^2)) at u, orders 0..kMaxJet.
std::array<double, TestFunction::kMaxJet + 1> bump_jet(double u) {
  constexpr int J = TestFunction::kMaxJet;
  std::array<double, J + 1> r{}, e{};
  const double v0 = (1.0 - u) * (1.0 + u), v1 = -2.0 * u;
  r[0] = 1.0 / v0;
  r[1] = -v1 * r[0] / v0;
  for (int k = 2; k <= J; ++k) r[k] = -(v1 * r[k - 1] - r[k - 2]) / v0;
  e[0] = std::exp(-r[0]);
  if (e[0] == 0.0) return e;
  for (int k = 1; k <= J; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc -= j * r[j] * e[k - j];
    e[k] = acc / k;
  }
  return e;
}

QuadratureSpec tighter(const QuadratureSpec& q, double factor) {
  QuadratureSpec t = q;
  t.abs_tol *= factor;
  return t;
}

enum class Side { kBelow, kAbove };

// Integral of w(y) g(y, 1 - x) over the part of the support on one side of
// c, where x = (y/c)^2 below c and x = (c/y)^2 above. Straddling pieces are
// integrated in the distance from c so 1 - x keeps full precision.
cplx split_integral(const TestFunction& w, double c, Side side,
                    const std::function<cplx(double, double)>& g, const QuadratureSpec& spec) {
  cplx total = 0.0;
  for (const Bump& b : w.bumps()) {
    if (side == Side::kBelow) {
      if (b.a1 >= c) continue;
      if (b.a2 <= c) {
        total += integrate_finite(
                     [&](double y) {
                       return bump_value(b, y) * g(y, (1.0 - y / c) * (1.0 + y / c));
                     },
                     b.a1, b.a2, spec)
                     .value;
      } else {
        total += integrate_finite(
                     [&](double d) {
                       const double y = c - d;
                       return bump_value(b, y) * g(y, (d / c) * (2.0 - d / c));
                     },
                     0.0, c - b.a1, spec, Singular::kLo)
                     .value;
      }
    } else {
      if (b.a2 <= c) continue;
      if (b.a1 >= c) {
        total += integrate_finite(
                     [&](double y) { return bump_value(b, y) * g(y, (y - c) * (y + c) / (y * y)); },
                     b.a1, b.a2, spec)
                     .value;
      } else {
        total += integrate_finite(
                     [&](double d) {
                       const double y = c + d;
                       return bump_value(b, y) * g(y, d * (2.0 * c + d) / (y * y));
                     },
                     0.0, b.a2 - c, spec, Singular::kLo)
                     .value;
      }
    }
  }
  return total;
}

bool straddles(const TestFunction& w, double c) {
  for (const Bump& b : w.bumps()) {
    if (b.a1 < c && c < b.a2) return true;
  }
  return false;
}

// int_0^{x0} J_nu(x) psi(x) dx / x from the product of the power series of
// J_nu and of the cosine transform.
cplx near_zero_piece(cplx nu, double x0, const TransformContext& ctx) {
  const TestFunction& w = ctx.omega;
  const double n = ctx.n;
  constexpr int kTerms = 40;
  std::vector<cplx> cos_coef;
  double fact = 1.0;
  for (int k = 0; k < kTerms; ++k) {
    if (k > 0) fact *= (2.0 * k - 1.0) * (2.0 * k);
    const double bound = std::pow(2.0 * w.a2() * x0 / n, 2 * k) / fact;
    if (k > 2 && bound < 1e-20) break;
    const cplx mu = mellin_omega(2.0 * k + 1.0, w, tighter(ctx.quad, 1e-2));
    cos_coef.push_back((k % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 / n, 2 * k) * mu / fact);
  }
  cplx total = 0.0;
  for (int j = 0; j < kTerms; ++j) {
    const cplx bj = (j % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0, -2.0 * j) *
                    rgamma(nu + static_cast<double>(j) + 1.0) /
                    std::tgamma(static_cast<double>(j) + 1.0);
    cplx row = 0.0;
    for (std::size_t k = 0; k < cos_coef.size(); ++k) {
      const cplx e = ctx.s + nu + 2.0 * static_cast<double>(k + j);
      row += cos_coef[k] * std::exp(e * std::log(x0)) / e;
    }
    total += bj * row;
    if (j > 2 && std::abs(bj) * std::pow(x0, 2 * j) < 1e-22 * std::abs(total)) break;
  }
  return 2.0 / kSqrtPi * std::exp(-ctx.s * std::log(n)) * std::exp(-nu * std::log(2.0)) * total;
}

cplx direct_transform(cplx nu, double j_max, const TransformContext& ctx,
                      const std::function<cplx(double)>& bessel) {
  constexpr double kSplit = 1.0;
  const cplx head = near_zero_piece(nu, kSplit, ctx);
  const EvalResult tail = integrate_semi_infinite(
      [&](double x) { return bessel(x) * psi_kernel(x, ctx) / x; }, kSplit, ctx.quad,
      psi_envelope(ctx, j_max));
  return head + tail.value;
}

bool near_nonpositive_integer(cplx z) {
  return std::abs(z.imag()) < 1e-13 && z.real() < 0.5 &&
         std::abs(z.real() - std::round(z.real())) < 1e-13;
}

}  // namespace

TestFunction::TestFunction(double a1, double a2, double scale) {
  if (!(a1 > 0.0 && a2 > a1)) throw Error(ErrorKind::kBadParam, "bump needs 0 < a1 < a2");
  bumps_.push_back({a1, a2, scale});
  init();
}

TestFunction::TestFunction(std::vector<Bump> bumps) : bumps_(std::move(bumps)) { init(); }

TestFunction TestFunction::Sum(const TestFunction& f, const TestFunction& g) {
  std::vector<Bump> all = f.bumps_;
  all.insert(all.end(), g.bumps_.begin(), g.bumps_.end());
  return TestFunction(std::move(all));
}

TestFunction TestFunction::scaled(double c) const {
  std::vector<Bump> all = bumps_;
  for (Bump& b : all) b.scale *= c;
  return TestFunction(std::move(all));
}

double TestFunction::operator()(double y) const {
  double v = 0.0;
  for (const Bump& b : bumps_) v += bump_value(b, y);
  return v;
}

double TestFunction::derivative(int j, double y) const {
  if (j < 0 || j > kMaxJet) throw Error(ErrorKind::kBadParam, "derivative order out of range");
  double v = 0.0;
  for (const Bump& b : bumps_) {
    if (!(y > b.a1 && y < b.a2)) continue;
    const double half = 0.5 * (b.a2 - b.a1);
    const double u = (y - 0.5 * (b.a1 + b.a2)) / half;
    v += b.scale * std::tgamma(j + 1.0) * bump_jet(u)[j] * std::pow(half, -j);
  }
  return v;
}

void TestFunction::init() {
  lo_ = std::numeric_limits<double>::infinity();
  hi_ = 0.0;
  for (const Bump& b : bumps_) {
    lo_ = std::min(lo_, b.a1);
    hi_ = std::max(hi_, b.a2);
  }
  // int_{-1}^{1} |j! E_j(u)| du, shared by all bumps.
  static const std::array<double, kMaxJet + 1> unit = [] {
    std::array<double, kMaxJet + 1> out{};
    QuadratureSpec q;
    q.abs_tol = 1e-300;
    q.rel_tol = 1e-7;
    q.max_subdivisions = 100000;
    double fact = 1.0;
    for (int j = 0; j <= kMaxJet; ++j) {
      if (j > 0) fact *= j;
      const EvalResult r = integrate_finite(
          [j](double u) { return cplx(std::abs(bump_jet(u)[j])); }, -1.0, 1.0, q);
      out[j] = 1.01 * fact * r.value.real();
    }
    return out;
  }();
  for (int j = 0; j <= kMaxJet; ++j) {
    double total = 0.0;
    for (const Bump& b : bumps_) {
      const double half = 0.5 * (b.a2 - b.a1);
      total += std::abs(b.scale) * unit[j] * std::pow(half, 1.0 - j);
    }
    jet_l1_[j] = total;
  }
}

void TransformContext::validate() const {
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  if (!(s.real() > 0.0)) throw Error(ErrorKind::kBadParam, "Re s must be positive");
}

double omega_eval(double y, const TestFunction& w) { return w(y); }

cplx mellin_omega(cplx alpha, const TestFunction& w, const QuadratureSpec& quad) {
  constexpr double kPartsFrom = 30.0;
  constexpr int kParts = 6;
  const int k = std::abs(alpha.imag()) >= kPartsFrom ? kParts : 0;
  cplx poch = 1.0;
  for (int j = 0; j < k; ++j) poch *= alpha + static_cast<double>(j);
  const cplx factor = (k % 2 == 0 ? 1.0 : -1.0) / poch;
  QuadratureSpec inner = quad;
  inner.abs_tol = quad.abs_tol / std::abs(factor);
  cplx total = 0.0;
  for (const Bump& b : w.bumps()) {
    const double half = 0.5 * (b.a2 - b.a1), mid = 0.5 * (b.a1 + b.a2);
    const double scale = b.scale * std::tgamma(k + 1.0) * std::pow(half, -k);
    total += integrate_finite(
                 [&](double y) {
                   const double u = (y - mid) / half;
                   const double d = k == 0 ? bump_value(b, y) : scale * bump_jet(u)[k];
                   return d * std::exp((alpha + static_cast<double>(k - 1)) * std::log(y));
                 },
                 b.a1, b.a2, inner)
                 .value;
  }
  return factor * total;
}

cplx psi_kernel(double x, const TransformContext& ctx) {
  ctx.validate();
  if (!(x > 0.0)) throw Error(ErrorKind::kOutOfDomain, "psi needs x > 0");
  constexpr double kPartsFrom = 16.0;
  constexpr int kParts = 6;
  const double n = ctx.n;
  const double k = 2.0 * x / n;
  const cplx outer = 2.0 / kSqrtPi * std::exp(ctx.s * std::log(x / n));
  // int omega cos(ky) = (-1)^{j/2} k^{-j} int omega^(j) cos(ky) for even j.
  const int j = k >= kPartsFrom ? kParts : 0;
  const double factor = ((j / 2) % 2 == 0 ? 1.0 : -1.0) * std::pow(k, -j);
  QuadratureSpec inner = ctx.quad;
  inner.abs_tol = 1e-2 * ctx.quad.abs_tol / (std::abs(outer) * std::abs(factor));
  cplx cos_part = 0.0;
  for (const Bump& b : ctx.omega.bumps()) {
    const double half = 0.5 * (b.a2 - b.a1), mid = 0.5 * (b.a1 + b.a2);
    const double scale = b.scale * std::tgamma(j + 1.0) * std::pow(half, -j);
    cos_part += integrate_finite(
                    [&](double y) {
                      const double d =
                          j == 0 ? bump_value(b, y) : scale * bump_jet((y - mid) / half)[j];
                      return cplx(d * std::cos(k * y));
                    },
                    b.a1, b.a2, inner)
                    .value;
  }
  return outer * factor * cos_part;
}

namespace {

// omega^(a + iT) for many T on one vertical line. The Mellin integrand is
// tabulated on composite Gauss-Legendre grids, one per dyadic range of |T|,
// each fine enough to resolve y^{iT} on its range: directly for small |T|,
// after six integrations by parts otherwise.
class MellinLine {
 public:
  MellinLine(const TestFunction& w, double a, double t_max) : a_(a) {
    for (double top = 256.0;; top *= 2.0) {
      grids_.push_back(build(w, a, std::min(top, t_max)));
      tops_.push_back(std::min(top, t_max));
      if (top >= t_max) break;
    }
  }

  cplx operator()(double t) const {
    std::size_t level = 0;
    while (level + 1 < tops_.size() && std::abs(t) > tops_[level]) ++level;
    const Grid& g = grids_[level];
    const bool by_parts = std::abs(t) >= kPartsFrom;
    const std::vector<double>& v = by_parts ? g.parts : g.direct;
    cplx total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) total += v[i] * std::polar(1.0, t * g.log_y[i]);
    if (!by_parts) return total;
    const cplx alpha(a_, t);
    cplx poch = 1.0;
    for (int j = 0; j < kParts; ++j) poch *= alpha + static_cast<double>(j);
    return total / poch;
  }

 private:
  static constexpr double kPartsFrom = 30.0;
  static constexpr int kParts = 6;

  struct Grid {
    std::vector<double> log_y, direct, parts;
  };

  static Grid build(const TestFunction& w, double a, double t_top) {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto& xs = Rule::abscissa();
    const auto& ws = Rule::weights();
    Grid g;
    for (const Bump& b : w.bumps()) {
      const double half = 0.5 * (b.a2 - b.a1), mid = 0.5 * (b.a1 + b.a2);
      const int panels = 8 + static_cast<int>(std::ceil(t_top * std::log(b.a2 / b.a1) / 6.0));
      const double width = (b.a2 - b.a1) / panels;
      const double jet_scale = b.scale * std::tgamma(kParts + 1.0) * std::pow(half, -kParts);
      for (int p = 0; p < panels; ++p) {
        const double c = b.a1 + (p + 0.5) * width;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          for (int sign : {1, -1}) {
            if (xs[i] == 0.0 && sign < 0) continue;
            const double y = c + sign * 0.5 * width * xs[i];
            const double wt = 0.5 * width * ws[i];
            const auto jet = bump_jet((y - mid) / half);
            g.log_y.push_back(std::log(y));
            g.direct.push_back(wt * b.scale * jet[0] * std::pow(y, a - 1.0));
            g.parts.push_back(wt * jet_scale * jet[kParts] * std::pow(y, a + kParts - 1.0));
          }
        }
      }
    }
    return g;
  }

  double a_;
  std::vector<Grid> grids_;
  std::vector<double> tops_;
};

}  // namespace

cplx psi_contour(double x, const TransformContext& ctx, double a_line, double t_max) {
  if (!(a_line < 1.0)) throw Error(ErrorKind::kBadParam, "contour must lie left of Re alpha = 1");
  if (!(x > 0.0)) throw Error(ErrorKind::kOutOfDomain, "psi needs x > 0");
  const double log_ratio = std::log(x / ctx.n);
  const MellinLine mellin(ctx.omega, a_line, t_max);
  auto integrand = [&](double t) {
    const cplx alpha(a_line, t);
    const cplx g = std::exp(lgamma(0.5 - 0.5 * alpha) - lgamma(0.5 * alpha) +
                            (alpha + ctx.s - 1.0) * log_ratio);
    return mellin(t) * g / (2.0 * kPi);
  };
  constexpr double kPanel = 16.0;
  QuadratureSpec panel_q = ctx.quad;
  panel_q.abs_tol = 0.05 * ctx.quad.abs_tol;
  cplx total = integrate_finite(integrand, -kPanel, kPanel, panel_q).value;
  int quiet = 0;
  for (double t = kPanel; t < t_max && quiet < 3; t += kPanel) {
    const cplx piece = integrate_finite(integrand, t, t + kPanel, panel_q).value +
                       integrate_finite(integrand, -t - kPanel, -t, panel_q).value;
    total += piece;
    quiet = std::abs(piece) < 0.1 * ctx.quad.abs_tol ? quiet + 1 : 0;
  }
  if (quiet < 3) throw ToleranceNotMet("Mellin-Barnes integrand has not decayed", total, 0.0);
  return total;
}

double psi_bound(double x, const TransformContext& ctx) {
  const double sigma = ctx.s.real();
  const double k = 2.0 * x / ctx.n;
  double best = ctx.omega.derivative_l1(0);
  for (int j = 1; j <= TestFunction::kMaxJet; ++j) {
    best = std::min(best, ctx.omega.derivative_l1(j) * std::pow(k, -j));
  }
  return 2.0 / kSqrtPi * std::pow(x / ctx.n, sigma) * best;
}

Envelope psi_envelope(const TransformContext& ctx, double j_max) {
  const double sigma = ctx.s.real();
  const double n = ctx.n;
  const TestFunction w = ctx.omega;
  return Envelope{[=](double x) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = static_cast<int>(std::floor(sigma)) + 1; j <= TestFunction::kMaxJet; ++j) {
      const double log_term = std::log(w.derivative_l1(j)) + j * std::log(0.5 * n) +
                              (sigma - j) * std::log(x) - std::log(j - sigma);
      best = std::min(best, log_term);
    }
    return j_max * 2.0 / kSqrtPi * std::pow(n, -sigma) * std::exp(best);
  }};
}

cplx psi_H_direct(int k, const TransformContext& ctx) {
  ctx.validate();
  if (k < 3 || k % 2 == 0) throw Error(ErrorKind::kBadParam, "k must be odd and at least 3");
  const int m = (k - 1) / 2;
  const cplx i_k = m % 2 == 0 ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  const cplx body = direct_transform(2.0 * m, 1.0, ctx, [m](double x) {
    return cplx(std::cyl_bessel_j(2.0 * m, x));
  });
  return 4.0 * i_k * body;
}

cplx psi_H_closed(int k, const TransformContext& ctx) {
  ctx.validate();
  if (k < 3 || k % 2 == 0) throw Error(ErrorKind::kBadParam, "k must be odd and at least 3");
  const double m = (k - 1) / 2;
  const cplx s = ctx.s;
  const double n = ctx.n, c = 0.5 * n;
  if (near_nonpositive_integer(0.5 * s - m)) {
    throw Error(ErrorKind::kBadParam, "Gamma(s/2 - m) has a pole at this s");
  }
  const cplx below = split_integral(
      ctx.omega, c, Side::kBelow,
      [&](double y, double omx) {
        return hyp2f1(0.5 * s + m, 0.5 * s - m, 0.5, (y / c) * (y / c), omx);
      },
      ctx.quad);
  const cplx above = split_integral(
      ctx.omega, c, Side::kAbove,
      [&](double y, double omx) {
        return std::exp((-2.0 * m - s) * std::log(y)) *
               hyp2f1(m + 0.5 * s, m + 0.5 * s + 0.5, 2.0 * m + 1.0, (c / y) * (c / y), omx);
      },
      ctx.quad);
  const cplx first = gamma(0.5 * s - m) / kSqrtPi * sinpi(0.5 * s) *
                     std::exp(-s * std::log(c)) * below;
  const cplx second = gamma(m + 0.5 * s + 0.5) / std::tgamma(2.0 * m + 1.0) * cospi(0.5 * s) *
                      std::pow(c, 2.0 * m) * above;
  return cplx(0.0, 4.0 / kPi) * gamma(0.5 * s + m) * (first + second);
}

cplx psi_D_direct(double t, const TransformContext& ctx) {
  ctx.validate();
  if (std::abs(t) > 30.0) throw Error(ErrorKind::kOutOfDomain, "|t| must not exceed 30");
  const cplx nu(0.0, 2.0 * t);
  const cplx head = near_zero_piece(nu, 1.0, ctx) + near_zero_piece(-nu, 1.0, ctx);
  const double j_max = 2.0 * std::sqrt(std::cosh(2.0 * kPi * t));
  const EvalResult tail = integrate_semi_infinite(
      [&](double x) { return bessel_j_imag_sum(2.0 * t, x) * psi_kernel(x, ctx) / x; }, 1.0,
      ctx.quad, psi_envelope(ctx, j_max));
  const cplx pref = t == 0.0 ? cplx(0.0, 2.0) : cplx(0.0, 2.0 * kPi * t / std::sinh(kPi * t));
  return pref * (head + tail.value);
}

cplx h1(cplx t, const TransformContext& ctx) {
  ctx.validate();
  const cplx s = ctx.s, it = cplx(0.0, 1.0) * t;
  const double c = 0.5 * ctx.n;
  const cplx trig = cospi(0.5 * s + it);
  if (trig == 0.0) return 0.0;
  const cplx a = 0.5 * s + it, b = 0.5 * s + 0.5 + it, cc = 1.0 + 2.0 * it;
  const cplx integral = split_integral(
      ctx.omega, c, Side::kAbove,
      [&](double y, double omx) {
        return std::exp(-s * std::log(y) - 2.0 * it * std::log(y / c)) *
               hyp2f1(a, b, cc, (c / y) * (c / y), omx);
      },
      ctx.quad);
  return trig / kPi * gamma(a) * gamma(b) * rgamma(cc) * integral;
}

cplx h2(cplx t, const TransformContext& ctx) {
  ctx.validate();
  const cplx s = ctx.s, it = cplx(0.0, 1.0) * t;
  const double c = 0.5 * ctx.n;
  const cplx a = 0.5 * s + it, b = 0.5 * s - it;
  const cplx integral = split_integral(
      ctx.omega, c, Side::kBelow,
      [&](double y, double omx) { return hyp2f1(a, b, 0.5, (y / c) * (y / c), omx); }, ctx.quad);
  if (integral == 0.0) return 0.0;
  return 2.0 * std::cosh(kPi * t) / kPi * sinpi(0.5 * s) * std::exp(-s * std::log(c)) *
         gamma(a) * gamma(b) / kSqrtPi * integral;
}

cplx psi_D_closed(cplx t, const TransformContext& ctx) {
  const cplx sum = h1(t, ctx) + h1(-t, ctx) + h2(t, ctx);
  const cplx sh = std::sinh(kPi * t);
  const cplx pref = t == 0.0 ? cplx(0.0, 2.0) : cplx(0.0, 2.0 * kPi) * t / sh;
  return pref * sum;
}

cplx algebraic_integral_below(const TransformContext& ctx) {
  const cplx e = 0.5 - ctx.s;
  const double c = 0.5 * ctx.n;
  if (e.real() <= -1.0 && straddles(ctx.omega, c)) {
    throw Error(ErrorKind::kDivergent, "(n^2/4 - y^2)^{1/2-s} is not integrable at y = n/2");
  }
  return split_integral(
      ctx.omega, c, Side::kBelow,
      [&](double, double omx) { return std::exp(e * std::log(c * c * omx)); }, ctx.quad);
}

cplx algebraic_integral_above(const TransformContext& ctx) {
  const cplx e = 0.5 - ctx.s;
  const double c = 0.5 * ctx.n;
  if (e.real() <= -1.0 && straddles(ctx.omega, c)) {
    throw Error(ErrorKind::kDivergent, "(y^2 - n^2/4)^{1/2-s} is not integrable at y = n/2");
  }
  return split_integral(
      ctx.omega, c, Side::kAbove,
      [&](double y, double omx) { return std::exp(e * std::log(y * y * omx)); }, ctx.quad);
}

cplx psi_D_special(const TransformContext& ctx) {
  ctx.validate();
  const cplx s = ctx.s;
  if (std::abs(s - 0.5) < 1e-14) throw Error(ErrorKind::kPoleAt, "Gamma(s - 1/2) at s = 1/2");
  const double c = 0.5 * ctx.n;
  return 2.0 * gamma(s - 0.5) * std::exp((s - 1.0) * std::log(c)) *
         (sinpi(0.5 * s) * algebraic_integral_below(ctx) +
          cospi(0.5 * s) * algebraic_integral_above(ctx));
}

namespace {

// log cos(w), stable for large |Im w|.
cplx log_cos(cplx w) {
  const cplx iw(-w.imag(), w.real());
  if (w.imag() > 0.0) return -iw + std::log(0.5 * (1.0 + std::exp(2.0 * iw)));
  return iw + std::log(0.5 * (1.0 + std::exp(-2.0 * iw)));
}

// Trapezoid nodes per unit of exp(-2 pi d / h) error, d the strip half-width.
constexpr double kMellinNodes = 36.0;
constexpr double kMellinTauCap = 4000.0;
constexpr double kMellinFloor = 1e-15;
// Nodes whose Gamma-ratio envelope sits this far below the peak are skipped.
constexpr double kMellinSkip = -40.0;
constexpr int kResync = 128;

// log Gamma(w) up to a multiple of 2 pi i, for Re w > 0; only its exponential
// is used. Stirling with the argument shifted past |w| = 15.
cplx log_gamma_mod(cplx w) {
  cplx shift = 1.0;
  while (std::norm(w) < 225.0) {
    shift *= w;
    w += 1.0;
  }
  const cplx inv = 1.0 / w, inv2 = inv * inv;
  const cplx series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 +
                             inv2 * (-1.0 / 1680.0 + inv2 * (1.0 / 1188.0 + inv2 * (-691.0 / 360360.0))))));
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series - std::log(shift);
}

}  // namespace

PsiDMellin::PsiDMellin(const TransformContext& ctx) : ctx_(ctx) {
  ctx_.validate();
  const cplx s = ctx_.s;
  const double c = -0.5 * s.real();
  step_ = 2.0 * kPi * (0.5 * s.real()) / kMellinNodes;

  // omega^(1-s-z) = int omega(e^v) e^{v(1-s-c)} e^{-i tau v} dv by the midpoint
  // rule in v, exact up to aliasing at |tau| ~ pi / dv.
  const double v0 = std::log(ctx_.omega.a1()), v1 = std::log(ctx_.omega.a2());
  const int m = static_cast<int>(std::ceil(1.5 * (v1 - v0) * kMellinTauCap / kPi)) + 64;
  const double dv = (v1 - v0) / m;
  std::vector<double> v(m);
  std::vector<cplx> g(m);
  for (int i = 0; i < m; ++i) {
    v[i] = v0 + (i + 0.5) * dv;
    g[i] = dv * ctx_.omega(std::exp(v[i])) * std::exp((1.0 - s - c) * v[i]);
  }
  auto sweep = [&](double dir) {
    std::vector<cplx> out;
    std::vector<cplx> cur(g), rot(m);
    for (int i = 0; i < m; ++i) rot[i] = std::polar(1.0, -dir * step_ * v[i]);
    double scale = 0.0, recent = 0.0;
    int since = 0;
    const int window = static_cast<int>(std::ceil(20.0 / step_));
    for (int k = 0; k * step_ <= kMellinTauCap; ++k) {
      if (k % kResync == 0) {
        for (int i = 0; i < m; ++i) cur[i] = g[i] * std::polar(1.0, -dir * k * step_ * v[i]);
      }
      cplx acc = 0.0;
      for (int i = 0; i < m; ++i) acc += cur[i];
      for (int i = 0; i < m; ++i) cur[i] *= rot[i];
      out.push_back(acc);
      scale = std::max(scale, std::abs(acc));
      recent = std::max(recent, std::abs(acc));
      if (++since == window) {
        if (recent <= kMellinFloor * scale) break;
        recent = 0.0;
        since = 0;
      }
    }
    return out;
  };
  const std::vector<cplx> up = sweep(1.0), down = sweep(-1.0);

  const double log2 = std::log(2.0);
  const cplx head = std::log(2.0 / kSqrtPi) - s * log2;
  auto push = [&](int k, cplx hat) {
    const cplx z(c, k * step_);
    const cplx lg = head + z * std::log(0.5 * ctx_.n) + lgamma(s + z) + log_cos(0.5 * kPi * (s + z)) -
                    (z + 1.0) * log2;
    z_.push_back(z);
    base_.push_back(hat == 0.0 ? 0.0 : std::exp(lg) * hat);
  };
  for (int k = static_cast<int>(down.size()) - 1; k >= 1; --k) push(-k, down[k]);
  for (int k = 0; k < static_cast<int>(up.size()); ++k) push(k, up[k]);
}

cplx PsiDMellin::operator()(double t) const {
  t = std::abs(t);
  cplx log_pref;
  if (t == 0.0) {
    log_pref = std::log(cplx(0.0, step_ / kPi));
  } else {
    const double log_sinh = kPi * t + std::log(0.5 * -std::expm1(-2.0 * kPi * t));
    log_pref = std::log(cplx(0.0, t * step_)) - log_sinh;
  }
  cplx total = 0.0;
  for (const double sign : {1.0, -1.0}) {
    const cplx nu(0.0, 2.0 * sign * t);
    for (std::size_t k = 0; k < z_.size(); ++k) {
      if (base_[k] == 0.0) continue;
      const cplx z = z_[k];
      const double tau = sign * z.imag();
      const double envelope =
          0.25 * kPi * (std::abs(2.0 * t + tau) - std::abs(2.0 * t - tau)) - kPi * t;
      if (envelope < kMellinSkip) continue;
      total += base_[k] * std::exp(log_gamma_mod(0.5 * (nu - z)) - log_gamma_mod(0.5 * (nu + z) + 1.0) +
                                     log_pref);
    }
    if (t == 0.0) {
      total *= 2.0;
      break;
    }
  }
  return total;
}

cplx psi_D_mellin(double t, const TransformContext& ctx) { return PsiDMellin(ctx)(t); }

}  // namespace zagier
