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
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "zagier/error.hpp"
#include "zagier/transforms.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
const QuadratureSpec kQuad{1e-11, 1e-11};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TransformContext ctx(int n, cplx s, TestFunction w = TestFunction(1.0, 3.0)) { return {n, s, std::move(w), kQuad}; }

TEST(TestFunction, Values) {
  const TestFunction w(1.0, 3.0);
  EXPECT_NEAR(omega_eval(2.0, w), std::exp(-1.0), 1e-15);
  EXPECT_EQ(omega_eval(1.0, w), 0.0);
  EXPECT_EQ(omega_eval(4.0, w), 0.0);
  EXPECT_GE(omega_eval(1.0001, w), 0.0);
  EXPECT_THROW(TestFunction(3.0, 1.0), Error);
  EXPECT_THROW(TestFunction(0.0, 1.0), Error);
}

TEST(TestFunction, SumAndScale) {
  const TestFunction a(1.0, 3.0), b(2.0, 3.5);
  const TestFunction sum = TestFunction::Sum(a, b), twice = a.scaled(2.0);
  for (double y = 0.5; y < 4.0; y += 0.173) {
    EXPECT_NEAR(sum(y), a(y) + b(y), 1e-15);
    EXPECT_NEAR(twice(y), 2.0 * a(y), 1e-15);
  }
  EXPECT_EQ(sum.a1(), 1.0);
  EXPECT_EQ(sum.a2(), 3.5);
}

TEST(Mellin, ValuesAndDecay) {
  const TestFunction w(1.0, 3.0);
  const int m = 4000;
  double mass = 0.0, first = 0.0;
  for (int i = 0; i < m; ++i) {
    const double y = 1.0 + 2.0 * (i + 0.5) / m;
    mass += w(y) * 2.0 / m;
    first += y * w(y) * 2.0 / m;
  }
  EXPECT_NEAR(mellin_omega(1.0, w, kQuad).real(), mass, 1e-10);
  EXPECT_NEAR(mellin_omega(2.0, w, kQuad).real(), first, 1e-10);
  // Midpoint rule in v = log y on the line Re z = 2.
  const auto midpoint = [&](double T) {
    const double b = std::log(3.0);
    const int k = 20000;
    cplx acc = 0.0;
    for (int i = 0; i < k; ++i) {
      const double v = b * (i + 0.5) / k;
      acc += w(std::exp(v)) * std::exp(cplx(2.0, T) * v) * (b / k);
    }
    return acc;
  };
  std::vector<double> a;
  for (double T : {10.0, 20.0, 40.0, 100.0, 200.0, 400.0}) {
    const cplx m_hat = mellin_omega(cplx(2.0, T), w, kQuad);
    EXPECT_LT(std::abs(m_hat - midpoint(T)), 1e-9) << T;
    a.push_back(std::abs(m_hat));
  }
  // T^3 |w^(2+iT)| climbs to about 770 near T = 60 before the
  // superpolynomial decay sets in.
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(a[i] * std::pow(10.0 * (1 << i), 3), 1e3);
  EXPECT_LT(a[4], a[3] / 8.0);
  EXPECT_LT(a[5], a[4] / 8.0);
}

TEST(PsiKernel, DecayAtInfinityAndZero) {
  const TransformContext c = ctx(4, 0.8);
  const double x0 = 2.0;
  std::vector<double> scaled;
  for (int k = 0; k <= 10; ++k) {
    const double scale = std::ldexp(1.0, k);
    const double p = std::abs(psi_kernel(scale * x0, c));
    EXPECT_LE(p, psi_bound(scale * x0, c)) << k;
    scaled.push_back(p * std::pow(scale, 4.0 - 0.8));
  }
  // Oscillatory up to x ~ 500 (peak about 164 at x = 64), then the decay
  // overtakes any fixed power.
  EXPECT_LT(*std::max_element(scaled.begin(), scaled.begin() + 7), 1e3);
  EXPECT_LT(scaled[9], scaled[0]);
  EXPECT_LT(scaled[10], 1e-3 * scaled[0]);
  for (double x : {1e-1, 1e-2, 1e-3, 1e-4}) {
    EXPECT_LT(std::abs(psi_kernel(x, c)) / std::pow(x, 0.8), 2.0 * mellin_omega(1.0, c.omega, kQuad).real());
  }
}

TEST(PsiKernel, DependsOnXOverN) {
  EXPECT_LT(rel(psi_kernel(2.0, ctx(10, 2.5)), psi_kernel(4.0, ctx(20, 2.5))), 1e-10);
  EXPECT_LE(std::abs(psi_kernel(7.0, ctx(10, 2.5))), psi_bound(7.0, ctx(10, 2.5)));
}

TEST(PsiD, ClosedFormEvenInT) {
  const TransformContext c = ctx(4, 0.8);
  EXPECT_LT(std::abs(psi_D_closed(1.3, c) - psi_D_closed(-1.3, c)), 1e-10);
  EXPECT_LT(std::abs(h2(0.9, c) - h2(-0.9, c)), 1e-12);
}

TEST(PsiD, MellinBarnesMatchesClosed) {
  const TransformContext c = ctx(4, 0.8);
  const PsiDMellin mb(c);
  EXPECT_GT(mb.nodes(), 0u);
  for (double t : {0.0, 0.25, 1.0, 3.0}) {
    EXPECT_LT(std::abs(mb(t) - psi_D_closed(t, c)), 1e-9) << t;
    EXPECT_LT(std::abs(mb(t) - mb(-t)), 1e-14);
  }
}

TEST(H1, SpecialValues) {
  for (const auto& [n, s] : std::vector<std::pair<int, double>>{{4, 0.8}, {3, 0.7}}) {
    const TransformContext c = ctx(n, s);
    EXPECT_LT(std::abs(h1((1.0 - s) / (2.0 * kI), c)), 1e-12);
    const cplx rhs = gamma(s - 0.5) * std::sin(kPi * s) / kPi * std::pow(0.5 * n, s - 1.0) *
                     algebraic_integral_above(c);
    EXPECT_LT(std::abs(h1((s - 1.0) / (2.0 * kI), c) - rhs), 1e-7);
  }
  const TransformContext c = ctx(4, 0.8);
  EXPECT_LT(std::abs(h1(1e-7, c) - h1(0.0, c)), 1e-5);
  EXPECT_TRUE(std::isfinite(std::abs(h1(0.0, c))));
}

TEST(H2, SpecialValues) {
  const double s = 0.8;
  const TransformContext c = ctx(8, s);
  const double sn = std::sin(0.5 * kPi * s);
  const cplx rhs = 2.0 / kPi * sn * sn * gamma(s - 0.5) * std::pow(4.0, s - 1.0) * algebraic_integral_below(c);
  EXPECT_LT(std::abs(h2((1.0 - s) / (2.0 * kI), c) - rhs), 1e-7);
  EXPECT_LT(std::abs(h2(-(1.0 - s) / (2.0 * kI), c) - rhs), 1e-7);
  EXPECT_EQ(algebraic_integral_below(ctx(1, s)), cplx(0.0));
  EXPECT_LT(std::abs(h2(0.4, ctx(1, s))), 1e-14);
}

TEST(PsiDSpecial, LimitOfClosedForm) {
  const double s = 0.8;
  const TransformContext c = ctx(4, s);
  const cplx t0 = (1.0 - s) / (2.0 * kI);
  const cplx lhs = psi_D_closed(t0, c) * std::sinh(kPi * t0) / ((1.0 - s) * std::cosh(kPi * t0));
  EXPECT_LT(std::abs(lhs - psi_D_special(c)), 1e-8);
  EXPECT_TRUE(std::isfinite(std::abs(psi_D_special(ctx(4, 0.999)))));
  const TransformContext twice = ctx(4, s, TestFunction(1.0, 3.0).scaled(2.0));
  EXPECT_LT(std::abs(psi_D_special(twice) - 2.0 * psi_D_special(c)), 1e-12);
}

TEST(Transforms, RejectBadContext) {
  EXPECT_THROW(psi_kernel(1.0, ctx(0, 0.8)), Error);
  EXPECT_THROW(psi_kernel(1.0, ctx(4, -0.2)), Error);
  EXPECT_THROW(psi_H_closed(4, ctx(4, 0.8)), Error);
}

}  // namespace
}  // namespace zagier
