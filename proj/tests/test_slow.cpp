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


// Direct quadrature of the Bessel transforms and long t-integrals; each
// case takes seconds to minutes.

#include <cmath>

#include <gtest/gtest.h>

#include "zagier/formula.hpp"
#include "zagier/transforms.hpp"

namespace zagier {
namespace {

const QuadratureSpec kQuad{1e-9, 1e-9};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TransformContext ctx(int n, double s) { return {n, s, TestFunction(1.0, 3.0), kQuad}; }

TEST(SlowTransforms, HolomorphicDirectAgainstClosed) {
  EXPECT_LT(rel(psi_H_direct(3, ctx(10, 0.6)), psi_H_closed(3, ctx(10, 0.6))), 1e-6);
  EXPECT_LT(rel(psi_H_direct(5, ctx(10, 1.2)), psi_H_closed(5, ctx(10, 1.2))), 1e-6);
  const cplx near_log = psi_H_direct(7, ctx(4, 0.51));
  EXPECT_TRUE(std::isfinite(near_log.real()) && std::isfinite(near_log.imag()));
  EXPECT_LT(rel(near_log, psi_H_closed(7, ctx(4, 0.51))), 1e-6);
}

TEST(SlowTransforms, MaassDirectAgainstClosed) {
  const TransformContext c = ctx(10, 0.6);
  EXPECT_LT(rel(psi_D_direct(0.5, c), psi_D_closed(0.5, c)), 1e-6);
  const cplx a = psi_D_direct(0.7, ctx(4, 0.8)), b = psi_D_direct(-0.7, ctx(4, 0.8));
  EXPECT_LT(std::abs(a - b), 1e-8);
}

TEST(SlowTransforms, MaassDecaysInT) {
  const TransformContext c = ctx(10, 0.6);
  const cplx at2 = psi_D_direct(2.0, c), at10 = psi_D_direct(10.0, c);
  EXPECT_TRUE(std::isfinite(std::abs(at10)));
  EXPECT_LT(std::abs(at10), std::abs(at2));
  // The direct integral cancels down from terms of size sqrt(cosh(2 pi t)),
  // so at t = 10 it is only accurate in absolute terms.
  EXPECT_LT(std::abs(psi_D_mellin(10.0, c) - at10), 1e-11);
  EXPECT_LT(rel(psi_D_mellin(10.0, c), psi_D_closed(10.0, c)), 1e-5);
  EXPECT_LT(rel(psi_D_mellin(2.0, c), at2), 1e-8);
}

TEST(SlowTransforms, CosineAgainstContour) {
  const TransformContext c{10, 2.5, TestFunction(1.0, 3.0), kQuad};
  const cplx kernel = psi_kernel(2.0, c);
  EXPECT_LT(std::abs(kernel - psi_contour(2.0, c, -0.5)), 1e-7);
  EXPECT_LT(std::abs(psi_contour(2.0, c, -0.5) - psi_contour(2.0, c, -1.5)), 1e-8);
}

// The truncation error of the t-integral shrinks as T_max doubles. It does so
// slowly (the integrand decays like a power of t when n/2 lies inside the
// support of omega), so the test compares successive differences rather than
// asking for a fixed tolerance.
TEST(SlowContinuous, TruncationErrorShrinksWithT) {
  const TestFunction w(1.0, 3.0);
  TruncationParams tp;
  cplx prev = 0.0;
  double prev_gap = 0.0;
  for (double T : {8.0, 16.0, 32.0}) {
    tp.T_max = T;
    const FrakC part = frak_C_parts(4, 0.8, w, tp);
    EXPECT_TRUE(std::isfinite(std::abs(part.value)));
    if (T > 8.0) {
      const double gap = std::abs(part.value - prev);
      if (T > 16.0) EXPECT_LT(gap, prev_gap / 4.0);
      prev_gap = gap;
    }
    prev = part.value;
  }
}

}  // namespace
}  // namespace zagier
