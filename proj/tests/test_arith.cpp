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
#include <random>

#include <gtest/gtest.h>

#include "zagier/arith.hpp"
#include "zagier/error.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

TEST(Chi4, Values) {
  EXPECT_EQ(chi4(3), -1);
  EXPECT_EQ(chi4(4), 0);
  EXPECT_EQ(chi4(-7), 1);
  EXPECT_EQ(chi4(-1), -1);
}

TEST(Chi4, CompletelyMultiplicative) {
  for (i64 m = -40; m <= 40; ++m) {
    EXPECT_EQ(chi4(m) == 0, m % 2 == 0) << m;
    for (i64 k = -40; k <= 40; ++k) EXPECT_EQ(chi4(m) * chi4(k), chi4(m * k)) << m << " " << k;
  }
}

TEST(Character, VanishesOffUnitsOfItsLevel) {
  const Character chi(12);
  EXPECT_EQ(chi(3), 0);
  EXPECT_EQ(chi(5), 1);
  EXPECT_EQ(chi(7), -1);
}

TEST(Arith, MobiusAndInverse) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mod_inverse(3, 4), 3);
  EXPECT_EQ(mod_inverse(1, 17), 1);
  EXPECT_EQ(mod_inverse(5, 8), 5);
  EXPECT_THROW(mod_inverse(2, 4), Error);
  for (i64 q = 2; q <= 60; ++q) {
    for (i64 a = 1; a < q; ++a) {
      if (gcd(a, q) == 1) EXPECT_EQ(mod(a * mod_inverse(a, q), q), 1);
    }
  }
}

TEST(BCount, Examples) {
  EXPECT_EQ(b_count(1, 1), 1);
  EXPECT_EQ(b_count(3, 1), 2);
  EXPECT_EQ(b_count(1, 2), 0);
}

TEST(BCount, LocalAssemblyMatchesEnumeration) {
  for (i64 q = 1; q <= 120; ++q) {
    for (i64 D = -30; D <= 30; ++D) EXPECT_EQ(b_count(q, D), b_count_local(q, D)) << q << " " << D;
  }
}

TEST(SigmaTwisted, Examples) {
  for (int k = 0; k <= 6; ++k) {
    EXPECT_NEAR(std::abs(sigma_twisted({0.3, -1.1}, i64{1} << (2 * k)) - 1.0), 0.0, 1e-14);
  }
  EXPECT_NEAR(std::abs(sigma_twisted(0.0, 9) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sigma_twisted({2.0, 0.5}, 1) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sigma_twisted_deriv({2.0, 0.5}, 1)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sigma_twisted_deriv(0.0, 9) - std::log(3.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sigma_twisted_deriv({0.4, 0.2}, 4)), 0.0, 1e-14);
}

TEST(SigmaTwisted, SquareFormMatchesDivisorSum) {
  const cplx s(0.35, -0.8);
  for (i64 n = 1; n <= 60; ++n) {
    const cplx a = sigma_twisted_square(s, n), b = sigma_twisted(s, n * n);
    EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(b))) << n;
    const cplx da = sigma_twisted_square_deriv(s, n), db = sigma_twisted_deriv(s, n * n);
    EXPECT_LT(std::abs(da - db), 1e-9 * std::max(1.0, std::abs(db))) << n;
  }
}

TEST(SigmaTwisted, OddTwistIdentity) {
  for (i64 n = 1; n <= 99; n += 2) {
    for (const cplx u : {cplx(0.3), cplx(-1.2, 0.4), cplx(2.0, -0.7)}) {
      const cplx lhs = sigma_twisted_square(0.5 - u, n);
      const cplx rhs = std::pow(static_cast<double>(n), 1.0 - 2.0 * u) * sigma_twisted_square(-0.5 + u, n);
      EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::abs(lhs)) << n;
    }
  }
}

TEST(Gauss, Examples) {
  EXPECT_LT(std::abs(gauss_quadratic_brute(1, 0, 4).value - cplx(2.0, 2.0)), 1e-12);
  EXPECT_LT(std::abs(gauss_quadratic_brute(1, 0, 2).value), 1e-12);
  EXPECT_LT(std::abs(gauss_quadratic_brute(1, 0, 1).value - 1.0), 1e-12);
  EXPECT_EQ(gauss_quadratic_closed(1, 1, 4).value, cplx(0.0));
  EXPECT_EQ(gauss_quadratic_closed(1, 2, 6).value, cplx(0.0));
  EXPECT_LT(std::abs(gauss_char_sum(1, 4).value - 2.0 * kI), 1e-12);
  EXPECT_LT(std::abs(gauss_char_sum(0, 4).value), 1e-12);
  EXPECT_LT(std::abs(gauss_char_sum(2, 8).value - gauss_char_sum_brute(2, 8).value), 1e-12);
}

TEST(Gauss, MagnitudeBoundedByTerms) {
  for (i64 q = 1; q <= 40; ++q) {
    for (i64 n = -5; n <= 5; ++n) {
      const ExpSum g = gauss_quadratic_brute(1, n, q);
      EXPECT_LE(std::abs(g.value), static_cast<double>(g.terms) * (1.0 + 1e-12));
    }
  }
}

TEST(Gauss, RejectNonPositiveModulus) {
  EXPECT_THROW(gauss_quadratic_brute(1, 1, 0), Error);
  EXPECT_THROW(gauss_quadratic_closed(1, 1, -3), Error);
  EXPECT_THROW(kloosterman_inf_zero(1, 1, 0, Character(4)), Error);
  EXPECT_THROW(mod(5, 0), Error);
}

TEST(Gauss, RandomClosedAgainstBrute) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<i64> qd(1, 400), nd(-1000, 1000);
  for (int trial = 0; trial < 300; ++trial) {
    const i64 q = qd(rng), n = nd(rng);
    i64 a = nd(rng);
    while (gcd(a, q) != 1) ++a;
    EXPECT_LT(std::abs(gauss_quadratic_closed(a, n, q).value - gauss_quadratic_brute(a, n, q).value), 1e-9)
        << a << " " << n << " " << q;
  }
}

TEST(Gauss, SquareTrichotomy) {
  for (i64 q = 1; q <= 100; ++q) {
    for (i64 a = 1; a < std::max<i64>(q, 2); ++a) {
      if (gcd(a, q) != 1) continue;
      const cplx g = gauss_quadratic_brute(a, 0, q).value;
      cplx expect = 0.0;
      if (q % 2 == 1) expect = static_cast<double>(q * chi4(q));
      if (q % 4 == 0) expect = 2.0 * static_cast<double>(q) * kI * static_cast<double>(chi4(a));
      EXPECT_LT(std::abs(g * g - expect), 1e-9) << a << " " << q;
    }
  }
}

TEST(Kloosterman, Examples) {
  EXPECT_NEAR(kloosterman(1, 1, 2), 1.0, 1e-12);
  EXPECT_NEAR(kloosterman(0, 0, 5), 4.0, 1e-12);
  EXPECT_NEAR(kloosterman(1, 1, 5), 2.0 + 2.0 * std::cos(4.0 * kPi / 5.0), 1e-12);
  EXPECT_NEAR(kloosterman(1, 1, 5), 0.381966, 1e-6);
}

TEST(Kloosterman, TwistedExamples) {
  const Character chi(4);
  EXPECT_LT(std::abs(kloosterman_inf_inf(0, 0, 4, chi).value), 1e-12);
  EXPECT_LT(std::abs(kloosterman_inf_zero(1, 1, 3, chi).value + kloosterman(3, 1, 3)), 1e-12);
  // Against the defining sum over units a, b with ab = 1 mod c, 4 | c.
  for (i64 c = 4; c <= 64; c += 4) {
    cplx direct = 0.0;
    for (i64 a = 1; a < c; ++a) {
      if (gcd(a, c) != 1) continue;
      const i64 b = mod_inverse(a, c);
      direct += unit_root(2 * a + 5 * b, c) * static_cast<double>(chi(b));
    }
    EXPECT_LT(std::abs(kloosterman_inf_inf(2, 5, c, chi).value - direct), 1e-10) << c;
  }
}

TEST(Kloosterman, WeilBound) {
  for (i64 p : {3, 5, 7, 11, 13, 101}) {
    for (i64 m = 1; m <= 5; ++m) EXPECT_LE(std::abs(kloosterman(m, 1, p)), 2.0 * std::sqrt(double(p)) + 1e-9);
  }
}

TEST(K, Examples) {
  EXPECT_LT(std::abs(K_brute(1, 0, 2).value), 1e-12);
  EXPECT_EQ(K_closed(1, 0, 2).value, cplx(0.0));
  EXPECT_EQ(K_closed(1, 2, 6).value, cplx(0.0));
  EXPECT_LT(std::abs(K_closed(1, 1, 6).value + 12.0 * kloosterman(2, 2, 3)), 1e-10);
  // Units mod 4 are 1 and 3, each its own inverse.
  const cplx direct = gauss_quadratic_brute(1, 2, 4).value * gauss_quadratic_brute(1, 2, 4).value +
                      gauss_quadratic_brute(3, 2, 4).value * gauss_quadratic_brute(3, 2, 4).value;
  EXPECT_LT(std::abs(K_brute(2, 2, 4).value - direct), 1e-12);
}

TEST(K, SymmetricAndClosedMatchesBrute) {
  for (i64 q = 1; q <= 48; ++q) {
    for (i64 n = 0; n <= 6; ++n) {
      for (i64 l = 0; l <= 6; ++l) {
        const cplx b = K_brute(n, l, q).value;
        EXPECT_LT(std::abs(b - K_brute(l, n, q).value), 1e-10);
        EXPECT_LT(std::abs(b - K_closed(n, l, q).value), 1e-8) << n << " " << l << " " << q;
      }
    }
  }
}

TEST(Ramanujan, Examples) {
  for (i64 C = 1; C <= 50; ++C) EXPECT_EQ(ramanujan_sum(0, C), euler_phi(C));
  EXPECT_EQ(ramanujan_sum(1, 6), 1);
  EXPECT_EQ(ramanujan_sum(6, 6), 2);
}

TEST(Ramanujan, UnitAndDivisorFormsAgree) {
  for (i64 C = 1; C <= 120; ++C) {
    for (i64 m = -60; m <= 60; ++m) EXPECT_EQ(ramanujan_sum_units(m, C), ramanujan_sum_divisors(m, C));
  }
}

TEST(UnitRoot, ReducesExactly) {
  EXPECT_EQ(unit_root(0, 7), cplx(1.0));
  EXPECT_LT(std::abs(unit_root(1, 4) - kI), 1e-15);
  EXPECT_LT(std::abs(unit_root(1000001, 4) - kI), 1e-15);
  EXPECT_LT(std::abs(unit_root(-1, 2) + 1.0), 1e-15);
}

}  // namespace
}  // namespace zagier
