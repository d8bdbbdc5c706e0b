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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "zagier/error.hpp"
#include "zagier/specfun.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCatalan = 0.915965594177219015054603514932;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(Gamma, ClassicalValues) {
  EXPECT_LT(rel(gamma(1.0), 1.0), 1e-14);
  EXPECT_LT(rel(gamma(0.5), std::sqrt(kPi)), 1e-14);
  const double t = 0.7;
  EXPECT_LT(rel(gamma(cplx(1.0, t)) * gamma(cplx(1.0, -t)), kPi * t / std::sinh(kPi * t)), 1e-12);
}

TEST(Gamma, Recurrence) {
  for (const cplx z : {cplx(0.3, 0.2), cplx(-2.7, 5.0), cplx(12.0, -30.0)}) {
    EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12);
    EXPECT_LT(std::abs(rgamma(z) * gamma(z) - 1.0), 1e-12);
  }
  EXPECT_EQ(rgamma(-3.0), cplx(0.0));
}

TEST(Zeta, ClassicalValues) {
  EXPECT_LT(rel(zeta(2.0), kPi * kPi / 6.0), 1e-14);
  EXPECT_LT(rel(zeta(0.0), -0.5), 1e-14);
}

TEST(Zeta, PartialSumOracle) {
  // Euler-Maclaurin corrected partial sum, independent of the library route.
  const cplx s(3.5, 0.7);
  const int N = 200000;
  cplx acc = 0.0;
  for (int k = 1; k < N; ++k) acc += std::pow(static_cast<double>(k), -s);
  const cplx Ns = std::pow(static_cast<double>(N), -s);
  acc += std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0) + 0.5 * Ns + s / (12.0 * N) * Ns;
  EXPECT_LT(rel(zeta(s), acc), 1e-12);
}

TEST(LChi4, ClassicalValues) {
  EXPECT_LT(rel(L_chi4(1.0), kPi / 4.0), 1e-13);
  EXPECT_LT(rel(L_chi4(2.0), kCatalan), 1e-13);
}

TEST(LChi4, TwoRoutesAgree) {
  for (const cplx s : {cplx(0.5), cplx(0.5, 3.0), cplx(1.7, -2.0), cplx(0.2, 1.0)}) {
    EXPECT_LT(rel(L_chi4(s), L_chi4_alternating(s)), 1e-10) << s;
  }
}

TEST(LChi4, DerivativeRoutes) {
  const cplx s = 1.5;
  const cplx series = L_chi4_deriv(s);
  EXPECT_LT(rel(series, L_chi4_deriv_fd(s)), 1e-8);
  // 30-digit reference from an independent summation.
  EXPECT_NEAR(series.real(), 0.12721993405776523, 1e-12);
  EXPECT_GT(series.real(), 0.0);
  const double e1 = std::abs(L_chi4_deriv_fd(s, 0.1) - series);
  const double e2 = std::abs(L_chi4_deriv_fd(s, 0.05) - series);
  EXPECT_LT(e2, 0.3 * e1);
}

TEST(Hyp2f1, Identities) {
  const cplx s = 0.8;
  EXPECT_LT(std::abs(hyp2f1(0.3, cplx(1.0, 2.0), 2.5, 0.0) - 1.0), 1e-15);
  const double z = 0.3;
  EXPECT_LT(rel(hyp2f1(0.5, s - 0.5, 0.5, z * z), std::pow(1.0 - z * z, 0.5 - s)), 1e-10);
  const double n = 2.0, y = 3.0;
  const double x = (n / (2.0 * y)) * (n / (2.0 * y));
  EXPECT_LT(rel(hyp2f1(s - 0.5, s, s, x), std::pow(y * y - n * n / 4.0, 0.5 - s) / std::pow(y, 1.0 - 2.0 * s)),
            1e-10);
}

TEST(Hyp2f1, NearOneAgainstGauss) {
  // 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) for Re(c-a-b) > 0.
  const cplx a = 0.3, b = cplx(0.2, 0.5), c = 2.1;
  const cplx limit = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
  EXPECT_LT(rel(hyp2f1(a, b, c, 1.0 - 1e-12, 1e-12), limit), 1e-8);
}

TEST(Bessel, Examples) {
  EXPECT_LT(std::abs(bessel_j(0.0, 1e-12) - 1.0), 1e-15);
  const double x = 5.0;
  EXPECT_LT(std::abs(bessel_j(1.0, x) + bessel_j(3.0, x) - 4.0 / x * bessel_j(2.0, x)), 1e-9);
  const cplx sum = bessel_j(cplx(0.0, 1.4), 3.0) + bessel_j(cplx(0.0, -1.4), 3.0);
  EXPECT_LT(std::abs(sum.imag()), 1e-12 * std::abs(sum));
  EXPECT_NEAR(sum.real(), bessel_j_imag_sum(1.4, 3.0), 1e-12);
}

TEST(Bessel, RoutesAgreeAcrossRegions) {
  for (const cplx nu : {cplx(0.0, 1.4), cplx(0.5, -2.0), cplx(2.3, 3.5)}) {
    for (double x : {2.0, 6.0, 12.0}) {
      const cplx ref = bessel_j(nu, x);
      EXPECT_LT(std::abs(bessel_j_ode(nu, x) - ref), 1e-9 * std::max(1.0, std::abs(ref))) << nu << " " << x;
      if (std::abs(nu.imag()) <= 4.0) {
        EXPECT_LT(std::abs(bessel_j_miller(nu, x) - ref), 1e-9 * std::max(1.0, std::abs(ref)));
      }
    }
    EXPECT_LT(std::abs(bessel_j_series(nu, 1.0) - bessel_j(nu, 1.0)), 1e-13);
  }
}

TEST(Quadrature, Examples) {
  const QuadratureSpec spec{1e-13, 1e-13};
  EXPECT_NEAR(integrate_finite([](double x) { return cplx(x); }, 0.0, 1.0, spec).value.real(), 0.5, 1e-14);
  // In terms of x alone the mass within one ulp of the endpoint is lost.
  const EvalResult sing = integrate_finite([](double x) { return cplx(1.0 / std::sqrt(1.0 - x)); }, 0.0, 1.0,
                                           {1e-9, 1e-9}, Singular::kHi);
  EXPECT_NEAR(sing.value.real(), 2.0, 1e-7);
  const EvalResult exact = integrate_endpoint_singular(
      [](double, double, double to_hi) { return cplx(1.0 / std::sqrt(to_hi)); }, 0.0, 1.0, spec);
  EXPECT_NEAR(exact.value.real(), 2.0, 1e-12);
  const EvalResult both = integrate_endpoint_singular(
      [](double, double to_lo, double to_hi) { return cplx(1.0 / std::sqrt(to_lo * to_hi)); }, 0.0, 1.0, spec);
  EXPECT_NEAR(both.value.real(), std::numbers::pi, 1e-12);
  const Envelope env{[](double X) { return std::exp(-X); }};
  EXPECT_NEAR(integrate_semi_infinite([](double x) { return cplx(std::exp(-x)); }, 0.0, spec, env).value.real(),
              1.0, 1e-12);
}

TEST(Quadrature, BumpAgainstFixedGrid) {
  const auto bump = [](double y) {
    const double u = y - 2.0;
    return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
  };
  const QuadratureSpec spec{1e-14, 1e-14};
  const double adaptive = integrate_finite([&](double y) { return cplx(bump(y)); }, 1.0, 3.0, spec).value.real();
  // Midpoint rule: spectrally accurate for compactly supported smooth functions.
  const int m = 20000;
  double grid = 0.0;
  for (int i = 0; i < m; ++i) grid += bump(1.0 + 2.0 * (i + 0.5) / m) * 2.0 / m;
  EXPECT_NEAR(adaptive, grid, 1e-12);
}

TEST(Quadrature, MissingEnvelopeOnDivergentInput) {
  const QuadratureSpec spec{1e-10, 1e-10};
  EXPECT_THROW(integrate_semi_infinite([](double x) { return cplx(1.0 / x); }, 1.0, spec, std::nullopt), Error);
}

}  // namespace
}  // namespace zagier
