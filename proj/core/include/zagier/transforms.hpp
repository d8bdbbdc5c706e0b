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


#ifndef ZAGIER_TRANSFORMS_HPP_
#define ZAGIER_TRANSFORMS_HPP_

#include <array>
#include <vector>

#include "zagier/specfun.hpp"

namespace zagier {

// One scaled bump c * exp(-1/(1-u^2)), u = (2y - a1 - a2)/(a2 - a1).
struct Bump {
  double a1;
  double a2;
  double scale;
};

// Smooth compactly supported weight: a finite sum of bumps. The single-bump
// case is the one used throughout; sums exist so linearity can be checked.
class TestFunction {
 public:
  static constexpr int kMaxJet = 24;

  TestFunction(double a1, double a2, double scale = 1.0);
  static TestFunction Sum(const TestFunction& f, const TestFunction& g);

  double operator()(double y) const;
  // j-th derivative, 0 <= j <= kMaxJet.
  double derivative(int j, double y) const;
  TestFunction scaled(double c) const;

  // Convex hull of the support.
  double a1() const { return lo_; }
  double a2() const { return hi_; }
  const std::vector<Bump>& bumps() const { return bumps_; }

  // Upper bound for the L1 norm of the j-th derivative, 0 <= j <= kMaxJet.
  double derivative_l1(int j) const { return jet_l1_[j]; }

 private:
  explicit TestFunction(std::vector<Bump> bumps);
  void init();

  std::vector<Bump> bumps_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::array<double, kMaxJet + 1> jet_l1_{};
};

struct TransformContext {
  int n;
  cplx s;
  TestFunction omega;
  QuadratureSpec quad;

  // Throws BadParam unless n >= 1 and Re s > 0.
  void validate() const;
};

double omega_eval(double y, const TestFunction& w);

// int omega(y) y^{alpha-1} dy. For |Im alpha| large the integral is taken
// after repeated integration by parts, which keeps the rounding floor far
// below the (rapidly decaying) value.
cplx mellin_omega(cplx alpha, const TestFunction& w, const QuadratureSpec& quad);

// psi(x) = (2/sqrt(pi)) (x/n)^s int omega(y) cos(2xy/n) dy.
cplx psi_kernel(double x, const TransformContext& ctx);

// The same function as a Mellin-Barnes integral over Re alpha = a_line < 1,
// (1/2 pi i) int omega^(alpha) Gamma(1/2 - alpha/2)/Gamma(alpha/2)
// (x/n)^{alpha+s-1} d alpha, truncated once |Im alpha| > t_max or the
// integrand has decayed below tolerance.
cplx psi_contour(double x, const TransformContext& ctx, double a_line,
                 double t_max = 4000.0);

// Bound on |psi(x)| for x > 0 from the derivative norms of omega.
double psi_bound(double x, const TransformContext& ctx);

// Envelope for int_X^inf |J(x) psi(x)| dx/x when |J| <= j_max.
Envelope psi_envelope(const TransformContext& ctx, double j_max);

// 4 i^k int_0^inf J_{k-1}(x) psi(x) dx/x for odd k >= 3, and its
// hypergeometric form.
cplx psi_H_direct(int k, const TransformContext& ctx);
cplx psi_H_closed(int k, const TransformContext& ctx);

// (2 pi i t / sinh(pi t)) int_0^inf (J_{2it}(x) + J_{-2it}(x)) psi(x) dx/x
// for real t, and the hypergeometric form h1(t) + h1(-t) + h2(t) times the
// same prefactor, valid for complex t.
cplx psi_D_direct(double t, const TransformContext& ctx);
cplx psi_D_closed(cplx t, const TransformContext& ctx);
cplx h1(cplx t, const TransformContext& ctx);
cplx h2(cplx t, const TransformContext& ctx);

// psi_D(t) for real t from the Mellin-Barnes form
//   int_0^inf J_nu(x) psi(x) dx/x
//     = (1/2 pi) int psi~(z) 2^{-z-1} Gamma((nu-z)/2) / Gamma((nu+z)/2+1) d(Im z)
// on Re z = -Re(s)/2, where psi~(z) = (2/sqrt(pi)) 2^{-s} (n/2)^z Gamma(s+z)
// cos(pi(s+z)/2) omega^(1-s-z). The line integral is a trapezoid sum; the
// t-independent factors are tabulated once. Stays accurate for t where the
// hypergeometric form loses precision, up to about t = 200.
class PsiDMellin {
 public:
  explicit PsiDMellin(const TransformContext& ctx);

  cplx operator()(double t) const;
  std::size_t nodes() const { return z_.size(); }

 private:
  TransformContext ctx_;
  double step_ = 0.0;
  std::vector<cplx> z_;
  std::vector<cplx> base_;
};
cplx psi_D_mellin(double t, const TransformContext& ctx);

// psi_D(t0) sinh(pi t0) / ((1-s) cosh(pi t0)) at t0 = (1-s)/(2i), from the
// algebraic integrals
//   2 Gamma(s-1/2) (n/2)^{s-1} [sin(pi s/2) int_0^{n/2} omega (n^2/4-y^2)^{1/2-s}
//                              + cos(pi s/2) int_{n/2}^inf omega (y^2-n^2/4)^{1/2-s}].
cplx psi_D_special(const TransformContext& ctx);

// The two algebraic integrals above: below = int_0^{n/2}, above = int_{n/2}^inf.
cplx algebraic_integral_below(const TransformContext& ctx);
cplx algebraic_integral_above(const TransformContext& ctx);

}  // namespace zagier

#endif  // ZAGIER_TRANSFORMS_HPP_
