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
#include <set>

#include <gtest/gtest.h>

#include "zagier/eisenstein.hpp"
#include "zagier/error.hpp"
#include "zagier/lseries.hpp"

namespace zagier {
namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::set<std::string> labels(int N) {
  std::set<std::string> out;
  for (const Cusp& c : enumerate_cusps(N)) out.insert(c.label());
  return out;
}

TEST(Cusps, Enumeration) {
  EXPECT_EQ(labels(4), (std::set<std::string>{"0", "1/2", "inf"}));
  EXPECT_EQ(labels(16), (std::set<std::string>{"0", "1/2", "1/4", "1/8", "1/12", "inf"}));
  EXPECT_EQ(enumerate_cusps(64).size(), 12u);
  EXPECT_THROW(enumerate_cusps(8), Error);
}

TEST(Cusps, ZeroAndInfinity) {
  for (int N : {4, 16, 64}) {
    EXPECT_TRUE(find_cusp(N, 1).is_zero());
    EXPECT_TRUE(find_cusp(N, N).is_infinity());
  }
}

TEST(Cusps, Singularity) {
  EXPECT_FALSE(is_singular(find_cusp(4, 2)));
  EXPECT_TRUE(is_singular(find_cusp(4, 4)));
  EXPECT_TRUE(is_singular(find_cusp(4, 1)));
  for (const Cusp& c : enumerate_cusps(16)) EXPECT_TRUE(is_singular(c)) << c.label();
  for (const Cusp& c : enumerate_cusps(64)) EXPECT_TRUE(is_singular(c)) << c.label();
}

TEST(Cusps, CosetCharacter) {
  const Cusp zero4 = find_cusp(4, 1), half16 = find_cusp(16, 2), c12 = find_cusp(16, 12);
  for (i64 C = -9; C <= 9; ++C) {
    for (i64 D = -9; D <= 9; ++D) {
      EXPECT_EQ(coset_character(EisCusp::kInfinity, zero4, C, D), chi4(-C));
      if (D % 2 == 0) EXPECT_EQ(coset_character(EisCusp::kZero, half16, C, D), chi4(D / 2));
      EXPECT_EQ(coset_character(EisCusp::kInfinity, c12, C, D), chi4(D));
    }
  }
}

TEST(Phi, TableRowsFromScalars) {
  const cplx s = 1.2;
  const Cusp inf64 = find_cusp(64, 64);
  for (i64 m = 1; m <= 80; ++m) {
    const cplx expect = m % 16 == 0 ? 16.0 / std::pow(64.0, 2.0 * s) * t_scalar(m / 16, s) : cplx(0.0);
    EXPECT_LT(std::abs(phi_closed(EisCusp::kInfinity, inf64, m, s).value - expect), 1e-15) << m;
  }
  // The cusp 1/(8u) with u = 3.
  const Cusp c = Cusp::Make(64, 3, 8);
  const i64 m = 5;
  const cplx expect = static_cast<double>(chi4(-3)) * unit_root(-m * 3, 8) * s_scalar(m, s) / std::pow(8.0, 2.0 * s);
  EXPECT_LT(rel(phi_closed(EisCusp::kInfinity, c, m, s).value, expect), 1e-13);
}

TEST(Phi, CachedScalarsMatchDirect) {
  const cplx s(1.5, 0.4);
  const PhiScalars cached(s);
  for (int N : {4, 16, 64}) {
    for (const Cusp& c : enumerate_cusps(N)) {
      if (!is_singular(c)) continue;
      for (i64 m = 1; m <= 30; ++m) {
        for (EisCusp a : {EisCusp::kInfinity, EisCusp::kZero}) {
          EXPECT_EQ(phi_closed(a, c, m, s).value, phi_closed(a, c, m, cached).value);
        }
      }
    }
  }
}

TEST(Phi, SquaresVanish) {
  const Cusp c32 = find_cusp(64, 32), c8 = find_cusp(16, 8);
  for (i64 m = 1; m <= 10; ++m) {
    EXPECT_LT(std::abs(phi_closed(EisCusp::kInfinity, c32, m * m, 1.3).value), 1e-15) << m;
    EXPECT_LT(std::abs(phi_closed(EisCusp::kInfinity, c8, m * m, 1.3).value), 1e-15) << m;
  }
  EXPECT_LT(std::abs(phi_closed(EisCusp::kZero, find_cusp(64, 2), 9, 1.3).value), 1e-15);
}

TEST(Phi, BruteForceMatchesClosed) {
  const cplx s = 1.2;
  for (int N : {4, 16, 64}) {
    const Cusp inf = find_cusp(N, N), zero = find_cusp(N, 1);
    for (i64 m : {1, 3, 4}) {
      for (const Cusp& c : {inf, zero}) {
        const cplx closed = phi_closed(EisCusp::kInfinity, c, m, s).value;
        const cplx brute = phi_bruteforce_inf(c, m, s, 2000).value;
        if (std::abs(closed) < 1e-14) {
          EXPECT_LT(std::abs(brute), 1e-12) << N << " " << c.label() << " " << m;
        } else {
          EXPECT_LT(rel(brute, closed), 1e-5) << N << " " << c.label() << " " << m;
        }
      }
    }
  }
}

TEST(Phi, Symmetries) {
  // N = 16: phi_{inf,0} = chi_4(-1) phi_{0,inf}; N = 4: phi_{inf,inf} = phi_{0,0}.
  const cplx a = phi_closed(EisCusp::kInfinity, find_cusp(16, 1), 7, 1.3).value;
  EXPECT_LT(std::abs(a + phi_closed(EisCusp::kZero, find_cusp(16, 16), 7, 1.3).value), 1e-15);
  const cplx b = phi_closed(EisCusp::kInfinity, find_cusp(4, 4), 4, 1.5).value;
  EXPECT_LT(std::abs(b - phi_closed(EisCusp::kZero, find_cusp(4, 1), 4, 1.5).value), 1e-15);
  for (int N : {4, 16, 64}) {
    for (const CheckReport& r : phi_symmetry_check(N, 3, cplx(1.4, 0.2))) EXPECT_TRUE(r.pass) << r.name;
  }
}

TEST(Phi, RejectsBadInput) {
  EXPECT_THROW(phi_closed(EisCusp::kInfinity, find_cusp(4, 4), 0, 1.2), Error);
  EXPECT_THROW(find_cusp(16, 3), Error);
  EXPECT_THROW(Cusp::Make(64, 2, 8), Error);
}

}  // namespace
}  // namespace zagier
