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


#include "zagier/formula.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zagier/error.hpp"
#include "zagier/lseries.hpp"
#include "zagier/specfun.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// Terms of the zagier_L series on the left of the decomposition identity.
constexpr i64 kLSeriesTerms = 20000;
// Relative size below which the cosine transform of omega is dropped.
constexpr double kCosineEps = 1e-13;
constexpr double kFrakRelTol = 1e-10;

using Params = std::vector<std::pair<std::string, std::string>>;

cplx cpow(double base, cplx e) { return std::exp(e * std::log(base)); }

void require_parity(int n, int parity, const char* what) {
  if (n < 1 || n % 2 != parity) throw Error(ErrorKind::kBadParam, what);
}

cplx omega_hat_one(const TestFunction& w, const QuadratureSpec& quad) {
  return mellin_omega(1.0, w, quad);
}

// sum_{q <= Q} q^{-2} sum_{l >= 1} l^{-s} psi(pi n l / q) K(n, l; q), with
// l^{-s} psi(pi n l / q) = (2/sqrt(pi)) (pi/q)^s C(2 pi l / q).
cplx k_sum(int n, cplx s, const CosineTransform& ct, i64 Q) {
  cplx total = 0.0;
  std::vector<double> W;
  for (i64 q = 1; q <= Q; ++q) {
    W.assign(static_cast<std::size_t>(q), 0.0);
    const i64 l_max = static_cast<i64>(std::floor(ct.k_max() * q / (2.0 * kPi)));
    for (i64 l = 1; l <= l_max; ++l) W[static_cast<std::size_t>(l % q)] += ct(2.0 * kPi * l / q);
    cplx acc = 0.0;
    for (i64 r = 0; r < q; ++r) {
      if (W[static_cast<std::size_t>(r)] != 0.0) acc += W[static_cast<std::size_t>(r)] * K_closed(n, r, q).value;
    }
    total += acc * cpow(kPi / q, s) / static_cast<double>(q * q);
  }
  return 2.0 / std::sqrt(kPi) * total;
}

// gamma^{-1} sum_l l^{-s} psi(x_l) S(l^2 mod c) over one modulus, where
// l^{-s} psi(x_l) = (2/sqrt(pi)) (scale/gamma)^s C(freq l / gamma) and the
// Kloosterman factor only depends on l mod c.
cplx cusp_block(cplx s, const CosineTransform& ct, i64 gamma, double scale, double freq, i64 c,
                const std::function<cplx(i64)>& kloost) {
  std::vector<double> W(static_cast<std::size_t>(c), 0.0);
  const i64 l_max = static_cast<i64>(std::floor(ct.k_max() * gamma / freq));
  for (i64 l = 1; l <= l_max; ++l) W[static_cast<std::size_t>(l % c)] += ct(freq * l / gamma);
  cplx acc = 0.0;
  for (i64 r = 0; r < c; ++r) {
    if (W[static_cast<std::size_t>(r)] != 0.0) acc += W[static_cast<std::size_t>(r)] * kloost(r);
  }
  return 2.0 / std::sqrt(kPi) * cpow(scale / gamma, s) * acc / static_cast<double>(gamma);
}

// Cusp-pair representation of k_sum with the same moduli and frequencies.
cplx cusp_sum(int n, cplx s, const CosineTransform& ct, i64 Q) {
  cplx total = 0.0;
  if (n % 2 == 0) {
    const i64 m = static_cast<i64>(n / 2) * (n / 2);
    const Character chi(4);
    cplx inf_inf = 0.0, inf_zero = 0.0;
    for (i64 g : allowed_moduli(4, EisCusp::kInfinity, Q)) {
      inf_inf += cusp_block(s, ct, g, 2.0 * kPi, 4.0 * kPi, g, [&](i64 r) {
        return kloosterman_inf_inf(r * r, m, g, chi).value;
      });
    }
    for (i64 g : allowed_moduli(4, EisCusp::kZero, 2 * Q)) {
      const i64 q = g / 2;
      inf_zero += cusp_block(s, ct, g, 2.0 * kPi, 4.0 * kPi, q, [&](i64 r) {
        return kloosterman_inf_zero(r * r, m, q, chi).value;
      });
    }
    total = -2.0 * kI * cpow(2.0, -s) * inf_inf + 2.0 * inf_zero;
  } else {
    const i64 m = static_cast<i64>(n) * n;
    const Character chi64(64), chi16(16);
    cplx level64 = 0.0, level16 = 0.0;
    for (i64 g : allowed_moduli(64, EisCusp::kZero, 4 * Q)) {
      const i64 r = g / 8;
      level64 += cusp_block(s, ct, g, 4.0 * kPi, 8.0 * kPi, r, [&](i64 x) {
        return kloosterman_inf_zero(x * x, m, r, chi64).value;
      });
    }
    for (i64 g : allowed_moduli(16, EisCusp::kZero, 4 * Q)) {
      const i64 q = g / 4;
      level16 += cusp_block(s, ct, g, 4.0 * kPi, 8.0 * kPi, q, [&](i64 x) {
        return kloosterman_inf_zero(x * x, m, q, chi16).value;
      });
    }
    total = 8.0 * level64 + (1.0 - cpow(2.0, -s)) * 4.0 * level16;
  }
  return total;
}

Params base_params(int n, cplx s) {
  return {{"n", std::to_string(n)}, {"s", format_complex(s)}};
}

// Common factor L(chi_4, s) zeta(s+2it) zeta(s-2it) / (L(chi_4,1+2it) L(chi_4,1-2it)).
cplx zeta_ratio(cplx s, double t) {
  const cplx it = kI * t;
  return L_chi4(s) * zeta(s + 2.0 * it) * zeta(s - 2.0 * it) /
         (L_chi4(1.0 + 2.0 * it) * L_chi4(1.0 - 2.0 * it));
}

struct BlockShape {
  int N;
  EisCusp b;
  i64 m;
  cplx weight;
};

BlockShape block_shape(ContCase c, cplx s, int n) {
  const bool even = c == ContCase::kEvenInfInf || c == ContCase::kEvenInfZeroPair;
  require_parity(n, even ? 0 : 1, even ? "this block needs n even" : "this block needs n odd");
  const i64 n1 = n / 2, nn = static_cast<i64>(n) * n;
  switch (c) {
    case ContCase::kEvenInfInf: return {4, EisCusp::kInfinity, n1 * n1, -2.0 * kI * cpow(2.0, -s)};
    case ContCase::kEvenInfZeroPair: return {4, EisCusp::kZero, n1 * n1, 2.0};
    case ContCase::kOdd64: return {64, EisCusp::kZero, nn, 8.0};
    case ContCase::kOdd16: return {16, EisCusp::kZero, nn, 4.0 * (1.0 - cpow(2.0, -s))};
  }
  throw Error(ErrorKind::kBadParam, "unknown block");
}

// Limit of sum_{l >= 1} a(l) from Riesz means of order 2 at geometrically
// spaced L, fitted to R(L) = S + A L^{e} cos(2t log L) + B L^{e} sin(2t log L)/(2t)
// + C / L (+ D / L^2), e = 1 - Re s.
struct FittedSum {
  cplx value{};
  cplx plain{};
  double spread = 0.0;
};

FittedSum riesz_limit(const std::function<cplx(i64)>& a, i64 L_max, double e, double t) {
  constexpr int kPoints = 16;
  std::vector<i64> marks;
  for (int j = 0; j < kPoints; ++j) {
    marks.push_back(std::llround(L_max * std::pow(10.0, -static_cast<double>(kPoints - 1 - j) / (kPoints - 1))));
  }
  std::vector<cplx> riesz;
  cplx p0 = 0.0, p1 = 0.0, p2 = 0.0;
  std::size_t k = 0;
  for (i64 l = 1; l <= L_max; ++l) {
    const cplx v = a(l);
    const double x = static_cast<double>(l);
    p0 += v;
    p1 += v * x;
    p2 += v * x * x;
    while (k < marks.size() && marks[k] == l) {
      riesz.push_back(p0 - 2.0 * p1 / x + p2 / (x * x));
      ++k;
    }
  }
  auto fit = [&](int columns) {
    Eigen::MatrixXcd A(kPoints, columns);
    Eigen::VectorXcd b(kPoints);
    for (int j = 0; j < kPoints; ++j) {
      const double L = static_cast<double>(marks[static_cast<std::size_t>(j)]);
      const double lg = std::log(L), pw = std::pow(L, e);
      const double ph = 2.0 * t * lg;
      const double sinc = std::abs(ph) < 1e-8 ? lg : std::sin(ph) / (2.0 * t);
      const cplx col[] = {1.0, pw * std::cos(ph), pw * sinc, 1.0 / L, 1.0 / (L * L)};
      for (int c = 0; c < columns; ++c) A(j, c) = col[c];
      b(j) = riesz[static_cast<std::size_t>(j)];
    }
    const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
    return x(0);
  };
  FittedSum r;
  r.value = fit(4);
  r.spread = std::abs(fit(5) - r.value);
  r.plain = p0;
  return r;
}

cplx block_lhs(ContCase c, cplx s, double t, int n, i64 L_max, FittedSum* detail) {
  const BlockShape shape = block_shape(c, s, n);
  const cplx sp(0.5, t);
  const PhiScalars sc(sp);
  std::vector<Cusp> cusps;
  std::vector<cplx> right;
  for (const Cusp& cu : enumerate_cusps(shape.N)) {
    if (!is_singular(cu)) continue;
    const cplx v = phi_closed(shape.b, cu, shape.m, sc).value;
    cusps.push_back(cu);
    right.push_back(cpow(static_cast<double>(shape.m), kI * t) * v);
  }
  const cplx z = s + 2.0 * kI * t;
  auto term = [&](i64 l) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < cusps.size(); ++j) {
      if (right[j] == 0.0) continue;
      acc += std::conj(phi_closed(EisCusp::kInfinity, cusps[j], l * l, sc).value) * right[j];
    }
    return acc * cpow(static_cast<double>(l), -z);
  };
  const FittedSum f = riesz_limit(term, L_max, 1.0 - s.real(), t);
  if (detail) *detail = f;
  return 0.5 * kI * shape.weight * zeta(2.0 * s) * f.value;
}

Params cont_params(cplx s, double t, int n) {
  Params p = base_params(n, s);
  p.emplace_back("t", format_double(t));
  return p;
}

std::string fit_note(const FittedSum& f, cplx scale, cplx rhs) {
  return "riesz-fit spread " + format_double(std::abs(scale * f.spread) / std::abs(rhs)) +
         ", plain truncation rel_err " + format_double(std::abs(scale * f.plain - rhs) / std::abs(rhs));
}

// int omega(y) (log|y^2 - c^2| + (pi/2) sgn(y - c)) dy with the logarithmic
// singularity at y = c handled by double exponential quadrature in |y - c|.
cplx log_kernel_integral(const TestFunction& w, double c, const QuadratureSpec& quad) {
  cplx total = 0.0;
  const double lo = w.a1(), hi = w.a2();
  if (lo < c) {
    const double top = std::min(hi, c);
    total += integrate_finite(
                 [&](double d) {
                   const double y = c - d;
                   return w(y) * (std::log(d) + std::log(y + c) - 0.5 * kPi);
                 },
                 c - top, c - lo, quad, top == c ? Singular::kLo : Singular::kNone)
                 .value;
  }
  if (hi > c) {
    const double bottom = std::max(lo, c);
    total += integrate_finite(
                 [&](double d) {
                   const double y = c + d;
                   return w(y) * (std::log(d) + std::log(y + c) + 0.5 * kPi);
                 },
                 bottom - c, hi - c, quad, bottom == c ? Singular::kLo : Singular::kNone)
                 .value;
  }
  return total;
}

cplx central_average(int n, const TestFunction& w, double u, const QuadratureSpec& quad) {
  return 0.5 * (central_point_assembled(n, w, u, quad) + central_point_assembled(n, w, -u, quad));
}

// Neville extrapolation to u = 0 of values that are even in u.
cplx extrapolate_even(const std::vector<double>& u, std::vector<cplx> v) {
  const std::size_t m = u.size();
  for (std::size_t k = 1; k < m; ++k) {
    for (std::size_t i = m - 1; i >= k; --i) {
      const double a = u[i] * u[i], b = u[i - k] * u[i - k];
      v[i] = (b * v[i] - a * v[i - 1]) / (b - a);
    }
  }
  return v[m - 1];
}

std::vector<double> checked_steps(const std::vector<double>& u_steps) {
  std::vector<double> u = u_steps;
  std::sort(u.begin(), u.end(), std::greater<>());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.size() < 2 || !(u.back() > 0.0) || u.front() >= 0.5) {
    throw Error(ErrorKind::kBadParam, "need at least two distinct u steps in (0, 1/2)");
  }
  return u;
}

CheckReport central_point_report(const char* name, int n, const TestFunction& w,
                                 const std::vector<double>& u_steps, const QuadratureSpec& quad,
                                 double tolerance) {
  const std::vector<double> u = checked_steps(u_steps);
  std::vector<cplx> v;
  for (double x : u) v.push_back(central_average(n, w, x, quad));
  const cplx limit = extrapolate_even(u, v);
  const cplx closed = central_point_closed(n, w, quad, std::numbers::egamma);
  TruncationParams tp;
  tp.quad = quad;
  Params p = {{"n", std::to_string(n)}, {"omega", "bump[" + format_double(w.a1()) + "," + format_double(w.a2()) + "]"}};
  std::string steps;
  for (double x : u) steps += (steps.empty() ? "" : ",") + format_double(x);
  p.emplace_back("u_steps", steps);
  return make_relative_report(name, std::move(p), limit, closed, tolerance, tp,
                              "unextrapolated rel_err at smallest u " +
                                  format_double(std::abs(v.back() - closed) / std::abs(closed)));
}

}  // namespace

cplx M_D_even(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad) {
  require_parity(n, 0, "M_D_even needs a positive even n");
  const cplx bracket = cpow(n, -2.0 * s) * sigma_twisted_square(s, n) + sigma_twisted_square(-s, n);
  return omega_hat_one(w, quad) * zeta(2.0 * s) / L_chi4(1.0 + s) * bracket;
}

cplx M_D_odd(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad) {
  require_parity(n, 1, "M_D_odd needs a positive odd n");
  return omega_hat_one(w, quad) * zeta(2.0 * s) / L_chi4(1.0 + s) * sigma_twisted_square(-s, n);
}

cplx M_D_brute(int n, cplx s, const TestFunction& w, i64 Q, const QuadratureSpec& quad) {
  if (n < 1 || Q < 1) throw Error(ErrorKind::kBadParam, "n and Q must be positive");
  cplx acc = 0.0;
  for (i64 q = 1; q <= Q; ++q) acc += K_closed(n, 0, q).value * cpow(static_cast<double>(q), -2.0 - s);
  return omega_hat_one(w, quad) * zeta(2.0 * s) * acc;
}

cplx M_C(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad) {
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  if (std::abs(s - 0.5) < 1e-14) throw Error(ErrorKind::kPoleAt, "Gamma(s - 1/2) at s = 1/2");
  if (!(s.real() < 1.5)) throw Error(ErrorKind::kOutOfDomain, "M_C needs Re s < 3/2");
  const TransformContext ctx{n, s, w, quad};
  const cplx sigma = sigma_twisted_square(s - 1.0, n) +
                     sigma_twisted_square(1.0 - s, n) * cpow(n, 2.0 * s - 2.0);
  const cplx bracket = sinpi(0.5 * s) * algebraic_integral_below(ctx) +
                       cospi(0.5 * s) * algebraic_integral_above(ctx);
  return gamma(s - 0.5) / (cpow(2.0, s - 1.0) * cpow(kPi, s - 0.5)) * sigma * zeta(2.0 * s - 1.0) /
         L_chi4(2.0 - s) * bracket;
}

cplx frak_C_kernel(double t, int n, cplx s) {
  const cplx it = kI * t;
  const cplx kernel = cpow(n, 2.0 * it) * sigma_twisted_square(-2.0 * it, n) +
                      cpow(n, -2.0 * it) * sigma_twisted_square(2.0 * it, n);
  return kernel * zeta(s + 2.0 * it) * zeta(s - 2.0 * it) /
         (L_chi4(1.0 + 2.0 * it) * L_chi4(1.0 - 2.0 * it));
}

cplx frak_C_integrand(double t, const TransformContext& ctx) {
  // psi_D(t) sinh(pi t) / t without the removable quotient.
  const cplx psi = 2.0 * kPi * kI * (h1(t, ctx) + h1(-t, ctx) + h2(t, ctx));
  return psi / std::cosh(kPi * t) * frak_C_kernel(t, ctx.n, ctx.s);
}

FrakC frak_C_parts(int n, cplx s, const TestFunction& w, const TruncationParams& tp) {
  tp.validate();
  if (!(s.real() > 0.0 && s.real() < 1.0) || std::abs(s - 0.5) < 1e-14) {
    throw Error(ErrorKind::kOutOfDomain, "the continuous integral needs 0 < Re s < 1, s != 1/2");
  }
  const TransformContext ctx{n, s, w, tp.quad};
  const PsiDMellin psi_D(ctx);
  auto f = [&](double t) {
    const double ratio = t == 0.0 ? kPi : std::tanh(kPi * t) / t;
    return psi_D(t) * ratio * frak_C_kernel(t, n, s);
  };
  QuadratureSpec q = tp.quad;
  q.panel_width = 1.0;
  q.rel_tol = std::max(q.rel_tol, kFrakRelTol);
  const cplx scale = L_chi4(s) / (4.0 * cpow(kPi, s - 0.5)) / (2.0 * kPi * kI) * 2.0;
  const double mid = 0.5 * tp.T_max;
  const cplx head = integrate_finite(f, 0.0, mid, q).value;
  const cplx tail = integrate_finite(f, mid, tp.T_max, q).value;
  return {scale * (head + tail), std::abs(scale * tail)};
}

cplx frak_C(int n, cplx s, const TestFunction& w, const TruncationParams& tp) {
  return frak_C_parts(n, s, w, tp).value;
}

double cosine_cutoff(const TestFunction& w, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::kBadParam, "eps must be positive");
  const double l1 = w.derivative_l1(0);
  for (double k = 1.0; k < 1e7; k *= 1.02) {
    double best = l1;
    for (int j = 1; j <= TestFunction::kMaxJet; ++j) best = std::min(best, w.derivative_l1(j) / std::pow(k, j));
    if (best <= eps * l1) return k;
  }
  throw Error(ErrorKind::kToleranceNotMet, "cosine transform bound never reaches eps");
}

CosineTransform::CosineTransform(const TestFunction& w, double k_max) : k_max_(k_max) {
  if (!(k_max > 0.0)) throw Error(ErrorKind::kBadParam, "k_max must be positive");
  for (const Bump& b : w.bumps()) {
    const double width = b.a2 - b.a1;
    // Midpoint nodes resolve frequencies up to pi / h; keep a margin of 4.
    const int m = std::max(200, static_cast<int>(std::ceil(4.0 * k_max * width / kPi)));
    const TestFunction single(b.a1, b.a2, b.scale);
    for (int i = 0; i < m; ++i) {
      const double y = b.a1 + width * (i + 0.5) / m;
      y_.push_back(y);
      w_.push_back(single(y) * width / m);
    }
  }
  const int panels = static_cast<int>(std::ceil(k_max / kPanel));
  coef_.assign(static_cast<std::size_t>(panels) * (kDegree + 1), 0.0);
  std::array<double, kDegree + 1> f{};
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * kPanel;
    for (int j = 0; j <= kDegree; ++j) {
      f[j] = direct(mid + 0.5 * kPanel * std::cos(kPi * (j + 0.5) / (kDegree + 1)));
    }
    for (int i = 0; i <= kDegree; ++i) {
      double acc = 0.0;
      for (int j = 0; j <= kDegree; ++j) acc += f[j] * std::cos(kPi * i * (j + 0.5) / (kDegree + 1));
      coef_[static_cast<std::size_t>(p) * (kDegree + 1) + i] = acc * (i == 0 ? 1.0 : 2.0) / (kDegree + 1);
    }
  }
}

double CosineTransform::direct(double k) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < y_.size(); ++i) acc += w_[i] * std::cos(k * y_[i]);
  return acc;
}

double CosineTransform::operator()(double k) const {
  k = std::abs(k);
  if (k > k_max_) return 0.0;
  const std::size_t panels = coef_.size() / (kDegree + 1);
  const std::size_t p = std::min(panels - 1, static_cast<std::size_t>(k / kPanel));
  const double x = 2.0 * (k - (p + 0.5) * kPanel) / kPanel;
  const double* c = &coef_[p * (kDegree + 1)];
  double b1 = 0.0, b2 = 0.0;
  for (int i = kDegree; i >= 1; --i) {
    const double b0 = 2.0 * x * b1 - b2 + c[i];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + c[0];
}

CheckReport decomposition_check(int n, cplx s, const TestFunction& w, const TruncationParams& tp,
                          double tolerance) {
  tp.validate();
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  if (!(s.real() > 1.5)) throw Error(ErrorKind::kOutOfDomain, "the decomposition needs Re s > 3/2");
  cplx lhs = 0.0;
  for (i64 l = static_cast<i64>(std::ceil(w.a1())); l <= static_cast<i64>(std::floor(w.a2())); ++l) {
    const double wl = w(static_cast<double>(l));
    if (l < 1 || wl == 0.0) continue;
    lhs += wl * zagier_L(static_cast<i64>(n) * n - 4 * l * l, s, kLSeriesTerms).value;
  }
  const CosineTransform ct(w, cosine_cutoff(w, kCosineEps));
  const cplx diag = M_D_brute(n, s, w, tp.Q_max, tp.quad);
  const cplx rest = zeta(2.0 * s) / cpow(kPi, s - 0.5) * k_sum(n, s, ct, tp.Q_max);
  Params p = base_params(n, s);
  p.emplace_back("omega", "bump[" + format_double(w.a1()) + "," + format_double(w.a2()) + "]");
  return make_report("decomposition.n=" + std::to_string(n), std::move(p), lhs, diag + rest, tolerance, tp,
                     "frequency cutoff " + format_double(ct.k_max()) + ", zagier_L terms " +
                         std::to_string(kLSeriesTerms));
}

std::vector<i64> allowed_moduli(int N, EisCusp b, i64 gamma_max) {
  std::vector<i64> out;
  if (N == 4 && b == EisCusp::kInfinity) {
    for (i64 g = 4; g <= gamma_max; g += 4) out.push_back(g);
    return out;
  }
  i64 step = 0;
  if (b == EisCusp::kZero) step = N == 4 ? 2 : N == 16 ? 4 : N == 64 ? 8 : 0;
  if (step == 0) throw Error(ErrorKind::kBadParam, "no moduli set for this cusp pair");
  for (i64 q = 1; q * step <= gamma_max; q += 2) out.push_back(q * step);
  return out;
}

CheckReport dual_decomposition_check(int n, cplx s, const TruncationParams& tp, const TestFunction& w,
                          double tolerance) {
  tp.validate();
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  if (!(s.real() > 1.5)) throw Error(ErrorKind::kOutOfDomain, "the cusp representation needs Re s > 3/2");
  const CosineTransform ct(w, cosine_cutoff(w, kCosineEps));
  const cplx lhs = k_sum(n, s, ct, tp.Q_max);
  const cplx rhs = cusp_sum(n, s, ct, tp.Q_max);
  Params p = base_params(n, s);
  p.emplace_back("omega", "bump[" + format_double(w.a1()) + "," + format_double(w.a2()) + "]");
  return make_relative_report("cusp_representation.n=" + std::to_string(n), std::move(p), lhs, rhs,
                              tolerance, tp, "frequency cutoff " + format_double(ct.k_max()));
}

const char* ContCaseName(ContCase c) {
  switch (c) {
    case ContCase::kEvenInfInf: return "even-inf-inf";
    case ContCase::kEvenInfZeroPair: return "even-inf-0-pair";
    case ContCase::kOdd64: return "odd-64";
    case ContCase::kOdd16: return "odd-16";
  }
  return "?";
}

cplx cont_closed_bracket(ContCase c, cplx s, double t, int n) {
  block_shape(c, s, n);
  const cplx it = kI * t;
  const cplx p = cpow(2.0, 2.0 * it), pm = cpow(2.0, -2.0 * it);
  const cplx den = 1.0 - cpow(2.0, -2.0 * s);
  const cplx x = pm + p - cpow(2.0, 1.0 - s);
  if (c == ContCase::kEvenInfInf || c == ContCase::kEvenInfZeroPair) {
    const i64 n1 = n / 2;
    const cplx minus = sigma_twisted_square(-2.0 * it, n1), plus = sigma_twisted_square(2.0 * it, n1);
    if (c == ContCase::kEvenInfInf) {
      return ((1.0 - p * cpow(2.0, -s)) * cpow(n1, 2.0 * it) * minus +
              (1.0 - pm * cpow(2.0, -s)) * cpow(n1, -2.0 * it) * plus) /
             (cpow(2.0, s) * den);
    }
    return ((1.0 - pm * cpow(2.0, -s)) * cpow(2.0 * n1, 2.0 * it) * minus +
            (1.0 - p * cpow(2.0, -s)) * cpow(2.0 * n1, -2.0 * it) * plus) /
           den;
  }
  const cplx base = cpow(n, 2.0 * it) * sigma_twisted_square(-2.0 * it, n);
  if (c == ContCase::kOdd64) {
    return base * ((1.0 - p * cpow(2.0, -s)) * (1.0 - pm * cpow(2.0, -s)) + x * cpow(2.0, -2.0 * s)) / den;
  }
  return base * (1.0 - cpow(2.0, -s)) * x * cpow(2.0, -s) / den;
}

cplx cont_combined_bracket(cplx s, double t, int n) {
  (void)s;
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  const cplx it = kI * t;
  const cplx first = cpow(n, 2.0 * it) * sigma_twisted_square(-2.0 * it, n);
  if (n % 2 == 1) return first;
  return first + cpow(n, -2.0 * it) * sigma_twisted_square(2.0 * it, n);
}

CheckReport cont_sum_identity(ContCase c, cplx s, double t, int n, const TruncationParams& tp,
                              double tolerance) {
  tp.validate();
  if (!(s.real() > 1.0)) throw Error(ErrorKind::kOutOfDomain, "the l-sum needs Re s > 1");
  FittedSum f;
  const cplx lhs = block_lhs(c, s, t, n, tp.L_max, &f);
  const cplx rhs = 0.25 * zeta_ratio(s, t) * cont_closed_bracket(c, s, t, n);
  const cplx scale = lhs / f.value;
  return make_relative_report(std::string("continuous.") + ContCaseName(c), cont_params(s, t, n), lhs, rhs,
                              tolerance, tp, fit_note(f, scale, rhs));
}

CheckReport combined_cont_check(cplx s, double t, int n, const TruncationParams& tp, double tolerance) {
  tp.validate();
  if (!(s.real() > 1.0)) throw Error(ErrorKind::kOutOfDomain, "the l-sum needs Re s > 1");
  const bool even = n % 2 == 0;
  const ContCase a = even ? ContCase::kEvenInfInf : ContCase::kOdd64;
  const ContCase b = even ? ContCase::kEvenInfZeroPair : ContCase::kOdd16;
  const cplx lhs = block_lhs(a, s, t, n, tp.L_max, nullptr) + block_lhs(b, s, t, n, tp.L_max, nullptr);
  const cplx ratio = 0.25 * zeta_ratio(s, t);
  const cplx rhs = ratio * cont_combined_bracket(s, t, n);
  const cplx parts = ratio * (cont_closed_bracket(a, s, t, n) + cont_closed_bracket(b, s, t, n));
  return make_relative_report(std::string("continuous.combined.") + (even ? "even" : "odd"),
                              cont_params(s, t, n), lhs, rhs, tolerance, tp,
                              "closed parts vs combined kernel rel_err " +
                                  format_double(std::abs(parts - rhs) / std::abs(rhs)));
}

std::vector<CheckReport> root_of_unity_checks() {
  auto sum = [](std::vector<i64> us, i64 den) {
    cplx acc = 0.0;
    for (i64 u : us) acc += static_cast<double>(chi4(-u)) * unit_root(u, den);
    return acc;
  };
  const TruncationParams tp;
  std::vector<CheckReport> out;
  out.push_back(make_report("continuous.roots.e4_over_1357", {}, sum({1, 3, 5, 7}, 4), -4.0 * kI, 1e-14, tp));
  out.push_back(make_report("continuous.roots.e8_over_1357", {}, sum({1, 3, 5, 7}, 8), 0.0, 1e-14, tp));
  out.push_back(make_report("continuous.roots.e4_over_13", {}, sum({1, 3}, 4), -2.0 * kI, 1e-14, tp));
  out.push_back(make_report("continuous.roots.chi_over_13", {}, sum({1, 3}, 1), 0.0, 1e-14, tp));
  return out;
}

cplx central_point_closed(int n, const TestFunction& w, const QuadratureSpec& quad, double euler_gamma) {
  if (n < 1) throw Error(ErrorKind::kBadParam, "n must be positive");
  const double c = 0.5 * n, inv_n = 1.0 / n;
  cplx head = sigma_twisted_square(-0.5, n);
  cplx deriv = sigma_twisted_square_deriv(-0.5, n);
  if (n % 2 == 0) {
    const cplx half = sigma_twisted_square(0.5, n);
    head += inv_n * half;
    deriv += -inv_n * sigma_twisted_square_deriv(0.5, n) + 2.0 * std::log(static_cast<double>(n)) * inv_n * half;
  }
  const cplx L = L_chi4(1.5);
  const cplx mass = omega_hat_one(w, quad);
  const cplx constant = -2.0 * L_chi4_deriv(1.5) / L - std::log(2.0 * kPi) + 3.0 * euler_gamma;
  return head / (2.0 * L) * (log_kernel_integral(w, c, quad) + constant * mass) - deriv / L * mass;
}

cplx central_point_assembled(int n, const TestFunction& w, double u, const QuadratureSpec& quad) {
  const cplx s = 0.5 + u;
  if (n % 2 == 0) return M_C(n, s, w, quad) + M_D_even(n, s, w, quad);
  return 0.5 * M_C(n, s, w, quad) + M_D_odd(n, s, w, quad);
}

CheckReport central_point_even(int n, const TestFunction& w, const std::vector<double>& u_steps,
                               const QuadratureSpec& quad, double tolerance) {
  require_parity(n, 0, "central_point_even needs a positive even n");
  return central_point_report("central.even", n, w, u_steps, quad, tolerance);
}

CheckReport central_point_odd(int n, const TestFunction& w, const std::vector<double>& u_steps,
                              const QuadratureSpec& quad, double tolerance) {
  require_parity(n, 1, "central_point_odd needs a positive odd n");
  return central_point_report("central.odd", n, w, u_steps, quad, tolerance);
}

CheckReport central_pole_cancellation(int n, const TestFunction& w, const std::vector<double>& u_steps,
                                      const QuadratureSpec& quad) {
  const std::vector<double> u = checked_steps(u_steps);
  auto gap = [&](double x) {
    return std::abs(central_point_assembled(n, w, x, quad) - central_point_assembled(n, w, -x, quad));
  };
  const double big = gap(u.front()), small = gap(u.back());
  const double bound = 2.0 * big * u.back() / u.front();
  TruncationParams tp;
  tp.quad = quad;
  Params p = {{"n", std::to_string(n)},
              {"u_large", format_double(u.front())},
              {"u_small", format_double(u.back())}};
  return make_report(std::string("central.pole_cancellation.") + (n % 2 == 0 ? "even" : "odd"), std::move(p),
                     small, 0.0, bound, tp, "gap at u_large " + format_double(big));
}

MainTerms assemble_mainterms(int n, cplx s, const TestFunction& w, const TruncationParams& tp) {
  tp.validate();
  if (!(s.real() > 0.0 && s.real() < 1.0) || std::abs(s - 0.5) < 1e-14) {
    throw Error(ErrorKind::kOutOfDomain, "the explicit formula needs 0 < Re s < 1, s != 1/2");
  }
  MainTerms r;
  r.n = n;
  r.s = s;
  const bool even = n % 2 == 0;
  r.M_D = even ? M_D_even(n, s, w, tp.quad) : M_D_odd(n, s, w, tp.quad);
  r.M_C = M_C(n, s, w, tp.quad);
  const FrakC cont = frak_C_parts(n, s, w, tp);
  r.frak_C = cont.value;
  r.frak_C_upper_half = cont.upper_half;
  const cplx pi_pow = cpow(kPi, 0.5 - s);
  const cplx den = 1.0 - cpow(2.0, -2.0 * s);
  if (even) {
    r.computed = r.M_D + r.M_C + r.frak_C;
    r.spectral_slots = {{"M_inf(n^2/4, 4, s)", -cpow(2.0, 1.0 - s) * pi_pow * kI / den},
                        {"M_0(n^2/4, 4, s)", 2.0 * pi_pow / den}};
  } else {
    r.computed = r.M_D + 0.5 * (r.M_C + r.frak_C);
    r.spectral_slots = {{"M_0(n^2, 64, s)", 8.0 * pi_pow / den},
                        {"M_0(n^2, 16, s)", 4.0 * pi_pow / (1.0 + cpow(2.0, -s))}};
  }
  r.note = "discrete and holomorphic moments need cusp form data and are not evaluated";
  return r;
}

}  // namespace zagier
