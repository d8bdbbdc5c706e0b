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


#ifndef ZAGIER_EISENSTEIN_HPP_
#define ZAGIER_EISENSTEIN_HPP_

#include <string>
#include <vector>

#include "zagier/arith.hpp"
#include "zagier/lseries.hpp"
#include "zagier/report.hpp"

namespace zagier {

// The cusp 1/w of Gamma_0(N), w = u f with f | N and u a unit modulo
// (f, N/f). N1 = N/(N, w) and N2 = N1/(N1, w).
struct Cusp {
  int N = 0;
  i64 u = 1;
  i64 f = 1;
  i64 w = 1;
  i64 N1 = 1;
  i64 N2 = 1;

  static Cusp Make(int N, i64 u, i64 f);

  bool is_zero() const { return w == 1; }
  bool is_infinity() const { return w == N; }
  // "0", "inf" or "1/w".
  std::string label() const;
};

// Which of the two Atkin-Lehner cusps the Eisenstein series is attached to.
enum class EisCusp { kInfinity, kZero };

const char* EisCuspName(EisCusp a);

// Inequivalent cusps of Gamma_0(N), N in {4, 16, 64}, ordered by f then u.
std::vector<Cusp> enumerate_cusps(int N);
// Looks up the representative with the given w; throws BadParam if absent.
Cusp find_cusp(int N, i64 w);

// chi_4(1 + w N2) == 1.
bool is_singular(const Cusp& c);

// chi_4 of sigma_c rho sigma_a^{-1} for a coset representative with bottom
// row (C, D) before scaling.
int coset_character(EisCusp a, const Cusp& c, i64 C, i64 D);

struct PhiValue {
  cplx value{};
  std::string formula_tag;
};

// s(m) and t(m) at a fixed s with L(chi_4, 2s) computed once. The divisor
// sums only see the odd part of m; when that is a square they come from the
// factorisation of its root, and the last one is cached. Not thread-safe.
class PhiScalars {
 public:
  explicit PhiScalars(cplx s);

  cplx s() const { return s_; }
  // sigma_{1-2s}(chi_4; m) / L(chi_4, 2s).
  cplx s_value(i64 m) const;
  // 2i sigma_{2s-1}(chi_4; m) m^{1-2s} / L(chi_4, 2s).
  cplx t_value(i64 m) const;

 private:
  void load(i64 m) const;

  cplx s_;
  cplx inv_L2s_;
  mutable i64 odd_ = 0;
  mutable cplx sigma_pos_{};
  mutable cplx sigma_neg_{};
};

// Fourier coefficient phi_{a,c}(m, s, chi_4) from the closed tables.
// Throws UnknownRow outside N in {4, 16, 64} or for a non-singular cusp.
PhiValue phi_closed(EisCusp a, const Cusp& c, i64 m, cplx s);
PhiValue phi_closed(EisCusp a, const Cusp& c, i64 m, const PhiScalars& s);

// The same coefficient for a = infinity as the Kloosterman-type double sum
// over moduli C <= C_max. The tail bound uses |inner sum| <= 2^{v_2(f)}
// sigma(m). Throws OutOfDomain unless Re s > 1, and ToleranceNotMet if a
// tolerance is given and the tail bound exceeds it.
SeriesValue phi_bruteforce_inf(const Cusp& c, i64 m, cplx s, i64 C_max,
                               double tolerance = 0.0);

// The a = infinity row equals chi_4(-u) (or 1 for the t-type rows) times
// the a = 0 row of the dual cusp f -> N/f, u -> -u. One report per
// singular cusp.
std::vector<CheckReport> phi_symmetry_check(int N, i64 m, cplx s,
                                            double tolerance = 1e-12);

}  // namespace zagier

#endif  // ZAGIER_EISENSTEIN_HPP_
