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
#include "zagier/formula.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);
const QuadratureSpec kQuad{1e-12, 1e-12};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(Diagonal, SmallNClosedForms) {
  const TestFunction w(1.0, 3.0);
  const cplx s(2.5, 0.3);
  const cplx mass = mellin_omega(1.0, w, kQuad);
  EXPECT_LT(rel(M_D_even(2, s, w, kQuad),
                mass * zeta(2.0 * s) * (std::pow(2.0, -2.0 * s) + 1.0) / L_chi4(1.0 + s)),
            1e-10);
  EXPECT_LT(rel(M_D_odd(1, s, w, kQuad), mass * zeta(2.0 * s) / L_chi4(1.0 + s)), 1e-10);
  EXPECT_LT(rel(M_D_even(4, s, w.scaled(2.0), kQuad), 2.0 * M_D_even(4, s, w, kQuad)), 1e-12);
  EXPECT_THROW(M_D_even(3, s, w), Error);
  EXPECT_THROW(M_D_odd(4, s, w), Error);
}

TEST(Diagonal, ClosedAgainstBrute) {
  const TestFunction w(1.0, 3.0);
  for (int n : {2, 3, 4, 5, 6}) {
    const cplx closed = n % 2 == 0 ? M_D_even(n, 2.5, w, kQuad) : M_D_odd(n, 2.5, w, kQuad);
    EXPECT_LT(rel(M_D_brute(n, 2.5, w, 20000, kQuad), closed), 1e-4) << n;
  }
}

TEST(Residue, BracketAgainstHypergeometricLimit) {
  const TestFunction w(1.0, 3.0);
  const int n = 4;
  const double s = 0.8;
  const TransformContext ctx{n, s, w, kQuad};
  // psi_D at (1-s)/(2i) through h1, h2 gives the bracket of the residue term.
  const cplx t0 = (1.0 - s) / (2.0 * kI);
  const cplx limit = psi_D_closed(t0, ctx) * std::sinh(kPi * t0) / ((1.0 - s) * std::cosh(kPi * t0));
  const cplx bracket = limit / (2.0 * gamma(s - 0.5) * std::pow(0.5 * n, s - 1.0));
  const cplx sigma = sigma_twisted_square(s - 1.0, n) + sigma_twisted_square(1.0 - s, n) * std::pow(n, 2.0 * s - 2.0);
  const cplx expect = gamma(s - 0.5) / (std::pow(2.0, s - 1.0) * std::pow(kPi, s - 0.5)) * sigma *
                      zeta(2.0 * s - 1.0) / L_chi4(2.0 - s) * bracket;
  EXPECT_LT(rel(M_C(n, s, w, kQuad), expect), 1e-7);
}

TEST(Residue, DomainAndPole) {
  const TestFunction w(1.0, 3.0);
  EXPECT_THROW(M_C(4, 0.5, w), Error);
  EXPECT_THROW(M_C(4, 1.6, w), Error);
  EXPECT_NO_THROW(M_C(4, 0.51, w));
}

TEST(Residue, OddSigmaFactorCollapses) {
  const int n = 3;
  const cplx s = 0.8;
  const cplx lhs = sigma_twisted_square(s - 1.0, n) + std::pow(double(n), 2.0 * s - 2.0) * sigma_twisted_square(1.0 - s, n);
  EXPECT_LT(rel(lhs, 2.0 * sigma_twisted_square(s - 1.0, n)), 1e-10);
}

TEST(Continuous, IntegrandEvenAndRemovableAtZero) {
  const TransformContext ctx{4, 0.8, TestFunction(1.0, 3.0), kQuad};
  for (double t : {0.3, 1.7, 4.0}) {
    EXPECT_LT(std::abs(frak_C_integrand(t, ctx) - frak_C_integrand(-t, ctx)), 1e-10 * std::abs(frak_C_integrand(t, ctx)));
  }
  const cplx at0 = frak_C_integrand(0.0, ctx);
  EXPECT_TRUE(std::isfinite(std::abs(at0)));
  EXPECT_LT(std::abs(frak_C_integrand(1e-6, ctx) - at0), 1e-8 * std::abs(at0));
}

TEST(Continuous, HalfLineDoublingEqualsFullLine) {
  const TestFunction w(1.0, 3.0);
  TruncationParams tp;
  tp.T_max = 2.0;
  tp.quad = {1e-11, 1e-11};
  const cplx s = 0.8;
  const TransformContext ctx{4, s, w, tp.quad};
  const EvalResult full = integrate_finite([&](double t) { return frak_C_integrand(t, ctx); }, -2.0, 2.0, {1e-12, 1e-12});
  const cplx expect = full.value * L_chi4(s) / (4.0 * std::pow(kPi, s - 0.5)) / (2.0 * kPi * kI);
  EXPECT_LT(rel(frak_C(4, s, w, tp), expect), 1e-9);
}

TEST(MainTerms, SpectralSlotCoefficients) {
  const TestFunction w(1.0, 3.0);
  TruncationParams tp;
  tp.T_max = 1.0;
  const cplx s = 0.8;
  const cplx den = 1.0 - std::pow(2.0, -2.0 * s);
  const cplx pi_pow = std::pow(kPi, 0.5 - s);
  const MainTerms even = assemble_mainterms(4, s, w, tp);
  ASSERT_EQ(even.spectral_slots.size(), 2u);
  EXPECT_LT(rel(even.spectral_slots[0].coefficient, -std::pow(2.0, 1.0 - s) * pi_pow * kI / den), 1e-14);
  EXPECT_LT(rel(even.spectral_slots[1].coefficient, 2.0 * pi_pow / den), 1e-14);
  EXPECT_LT(std::abs(even.computed - (even.M_D + even.M_C + even.frak_C)), 1e-14);
  const MainTerms odd = assemble_mainterms(3, s, w, tp);
  ASSERT_EQ(odd.spectral_slots.size(), 2u);
  EXPECT_LT(rel(odd.spectral_slots[0].coefficient, 8.0 * pi_pow / den), 1e-14);
  EXPECT_LT(rel(odd.spectral_slots[1].coefficient, 4.0 * pi_pow / (1.0 + std::pow(2.0, -s))), 1e-14);
  EXPECT_LT(std::abs(odd.computed - (odd.M_D + 0.5 * (odd.M_C + odd.frak_C))), 1e-14);
  for (const MainTerms* m : {&even, &odd}) {
    EXPECT_TRUE(std::isfinite(std::abs(m->M_D)) && std::isfinite(std::abs(m->M_C)) &&
                std::isfinite(std::abs(m->frak_C)));
  }
  EXPECT_THROW(assemble_mainterms(4, 1.2, w, tp), Error);
}

TEST(CosineTransform, InterpolationMatchesMidpointSum) {
  const TestFunction w(1.0, 3.0);
  const CosineTransform ct(w, 200.0);
  for (double k = 0.0; k <= 200.0; k += 3.37) EXPECT_NEAR(ct(k), ct.direct(k), 1e-13) << k;
  EXPECT_EQ(ct(250.0), 0.0);
  EXPECT_GT(cosine_cutoff(w, 1e-12), cosine_cutoff(w, 1e-6));
}

TEST(Decomposition, EmptySupportCancels) {
  TruncationParams tp;
  tp.Q_max = 64;
  const CheckReport r = decomposition_check(4, 2.5, TestFunction(2.2, 2.8), tp, 1e-3);
  EXPECT_EQ(r.lhs, cplx(0.0));
  EXPECT_TRUE(r.pass) << r.abs_err;
}

TEST(Decomposition, ModuliSets) {
  const auto odd_multiples = [](i64 step, i64 max) {
    std::vector<i64> v;
    for (i64 q = 1; step * q <= max; q += 2) v.push_back(step * q);
    return v;
  };
  EXPECT_EQ(allowed_moduli(16, EisCusp::kZero, 200), odd_multiples(4, 200));
  EXPECT_EQ(allowed_moduli(64, EisCusp::kZero, 200), odd_multiples(8, 200));
  EXPECT_EQ(allowed_moduli(4, EisCusp::kZero, 200), odd_multiples(2, 200));
  std::vector<i64> fours;
  for (i64 g = 4; g <= 200; g += 4) fours.push_back(g);
  EXPECT_EQ(allowed_moduli(4, EisCusp::kInfinity, 200), fours);
}

TEST(Decomposition, CuspRepresentationEven) {
  TruncationParams tp;
  tp.Q_max = 64;
  EXPECT_TRUE(dual_decomposition_check(4, 2.5, tp).pass);
}

TEST(ContinuousSums, RootsOfUnity) {
  for (const CheckReport& r : root_of_unity_checks()) EXPECT_TRUE(r.pass) << r.name;
}

TEST(ContinuousSums, EvenBlockAtOnePoint) {
  TruncationParams tp;
  const CheckReport r = cont_sum_identity(ContCase::kEvenInfInf, 1.5, 0.7, 4, tp, 1e-5);
  EXPECT_TRUE(r.pass) << r.rel_err;
  EXPECT_THROW(cont_sum_identity(ContCase::kEvenInfInf, 0.9, 0.7, 4, tp), Error);
}

TEST(ContinuousSums, CombinedKernelIsSumOfBlocks) {
  for (double t : {0.0, 0.7, 2.5}) {
    EXPECT_LT(std::abs(cont_combined_bracket(1.5, t, 4) - cont_closed_bracket(ContCase::kEvenInfInf, 1.5, t, 4) -
                       cont_closed_bracket(ContCase::kEvenInfZeroPair, 1.5, t, 4)),
              1e-12);
    EXPECT_LT(std::abs(cont_combined_bracket(1.5, t, 3) - cont_closed_bracket(ContCase::kOdd64, 1.5, t, 3) -
                       cont_closed_bracket(ContCase::kOdd16, 1.5, t, 3)),
              1e-12);
  }
}

TEST(Central, LimitsMatchClosedForms) {
  const TestFunction w(1.0, 3.0);
  const std::vector<double> u = {1e-2, 5e-3, 1e-3};
  EXPECT_TRUE(central_point_even(4, w, u).pass);
  EXPECT_TRUE(central_point_odd(3, w, u).pass);
  EXPECT_TRUE(central_point_odd(1, w, u).pass);
  EXPECT_TRUE(central_pole_cancellation(4, w, {1e-2, 1e-3}).pass);
  EXPECT_TRUE(central_pole_cancellation(3, w, {1e-2, 1e-3}).pass);
}

TEST(Central, EulerConstantEntersLinearly) {
  const TestFunction w(1.0, 3.0);
  const QuadratureSpec quad{1e-13, 1e-13};
  const double g = std::numbers::egamma;
  const cplx d1 = central_point_closed(4, w, quad, g + 1e-6) - central_point_closed(4, w, quad, g);
  const cplx d2 = central_point_closed(4, w, quad, g + 2e-6) - central_point_closed(4, w, quad, g);
  EXPECT_LT(rel(d2, 2.0 * d1), 1e-6);
  const cplx head = sigma_twisted_square(-0.5, 4) + sigma_twisted_square(0.5, 4) / 4.0;
  const cplx expect = 3e-6 * mellin_omega(1.0, w, quad) * head / (2.0 * L_chi4(1.5));
  EXPECT_LT(rel(d1, expect), 1e-6);
}

}  // namespace
}  // namespace zagier
