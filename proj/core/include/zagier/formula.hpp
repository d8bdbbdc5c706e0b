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


#ifndef ZAGIER_FORMULA_HPP_
#define ZAGIER_FORMULA_HPP_

#include <string>
#include <vector>

#include "zagier/arith.hpp"
#include "zagier/eisenstein.hpp"
#include "zagier/report.hpp"
#include "zagier/transforms.hpp"

namespace zagier {

// Diagonal main terms. M_D_even needs n even, M_D_odd n odd.
cplx M_D_even(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad = {});
cplx M_D_odd(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad = {});
// omega^(1) zeta(2s) sum_{q <= Q} K(n, 0; q) / q^{2+s}, Re s > 0.
cplx M_D_brute(int n, cplx s, const TestFunction& w, i64 Q, const QuadratureSpec& quad = {});

// Residue term from the continuous spectrum. Throws PoleAt at s = 1/2 and
// OutOfDomain unless Re s < 3/2.
cplx M_C(int n, cplx s, const TestFunction& w, const QuadratureSpec& quad = {});

// (n^{2it} sigma_{-2it}(n^2) + n^{-2it} sigma_{2it}(n^2)) zeta(s+2it) zeta(s-2it)
//   / (L(chi_4,1+2it) L(chi_4,1-2it)).
cplx frak_C_kernel(double t, int n, cplx s);
// Integrand of the continuous-spectrum integral (without the constant
// L(chi_4,s) / (4 pi^{s-1/2}) / (2 pi i)), psi_D from the hypergeometric form.
// Even in t; t = 0 is removable. Reliable for |t| up to about 8.
cplx frak_C_integrand(double t, const TransformContext& ctx);
// The full integral over |t| <= tp.T_max, 0 < Re s < 1, s != 1/2. psi_D comes
// from PsiDMellin, so large T_max is fine; psi_D decays slowly when n/2 lies
// in the support of omega.
cplx frak_C(int n, cplx s, const TestFunction& w, const TruncationParams& tp);
struct FrakC {
  cplx value{};
  // |contribution of T_max/2 <= t <= T_max|, a proxy for the truncation error.
  double upper_half = 0.0;
};
FrakC frak_C_parts(int n, cplx s, const TestFunction& w, const TruncationParams& tp);

// Largest frequency k with omega's cosine transform above eps times its L1
// norm, from the derivative bounds |C(k)| <= |omega^(j)|_1 / k^j.
double cosine_cutoff(const TestFunction& w, double eps);

// C(k) = int omega(y) cos(k y) dy on |k| <= k_max, zero beyond. Values come
// from piecewise Chebyshev interpolation of the midpoint rule, which is
// spectrally accurate for compactly supported smooth omega.
class CosineTransform {
 public:
  static constexpr double kPanel = 2.0;
  static constexpr int kDegree = 28;

  CosineTransform(const TestFunction& w, double k_max);

  double operator()(double k) const;
  // The midpoint sum itself.
  double direct(double k) const;
  double k_max() const { return k_max_; }

 private:
  std::vector<double> y_;
  std::vector<double> w_;
  std::vector<double> coef_;
  double k_max_;
};

// sum_l omega(l) L_{n^2 - 4l^2}(s) against the diagonal plus the K-sum
// representation, q <= tp.Q_max. Re s > 3/2.
CheckReport decomposition_check(int n, cplx s, const TestFunction& w, const TruncationParams& tp,
                          double tolerance = 1e-3);

// Non-diagonal part as the K-sum and as the cusp-pair Kloosterman sums of
// levels 4 (n even) or 64 and 16 (n odd), with matching moduli ranges.
CheckReport dual_decomposition_check(int n, cplx s, const TruncationParams& tp,
                          const TestFunction& w = TestFunction(1.0, 3.0),
                          double tolerance = 1e-4);

// Moduli gamma <= gamma_max allowed for the cusp pair of the given level:
// (4, inf): 0 mod 4; (4, 0): 2q; (16, 0): 4q; (64, 0): 8q; q odd.
std::vector<i64> allowed_moduli(int N, EisCusp b, i64 gamma_max);

enum class ContCase { kEvenInfInf, kEvenInfZeroPair, kOdd64, kOdd16 };

const char* ContCaseName(ContCase c);

// Pointwise-in-t identity behind one continuous-spectrum block: the l-sum
// of Eisenstein coefficient products against its zeta / L closed form.
// Both sides carry the common factor L(chi_4,s) zeta(s+2it) zeta(s-2it) /
// (L(chi_4,1+2it) L(chi_4,1-2it)) / 4 on the right. The l-sum runs to
// tp.L_max; its limit is taken from Riesz means fitted with the known
// pole exponents 1 - s +- 2it. Re s > 1.
CheckReport cont_sum_identity(ContCase c, cplx s, double t, int n, const TruncationParams& tp,
                              double tolerance = 1e-5);

// Closed right side of one block (the factor multiplying the common zeta / L
// ratio) and of the combined kernel for the parity of n.
cplx cont_closed_bracket(ContCase c, cplx s, double t, int n);
cplx cont_combined_bracket(cplx s, double t, int n);

// Sum of the two blocks for the parity of n against the combined kernel.
CheckReport combined_cont_check(cplx s, double t, int n, const TruncationParams& tp,
                                 double tolerance = 1e-5);

// The exact character sums consumed by the odd blocks.
std::vector<CheckReport> root_of_unity_checks();

// Closed forms of the main terms at s = 1/2: M_C + M_D_even for n even,
// M_C / 2 + M_D_odd for n odd. euler_gamma is a parameter so the
// dependence on it can be probed.
cplx central_point_closed(int n, const TestFunction& w, const QuadratureSpec& quad,
                          double euler_gamma);
// The assembled main terms at s = 1/2 + u.
cplx central_point_assembled(int n, const TestFunction& w, double u, const QuadratureSpec& quad);

// Symmetric averages over s = 1/2 +- u, extrapolated to u = 0 in u^2, against
// the closed form. u_steps needs at least two distinct positive values.
CheckReport central_point_even(int n, const TestFunction& w, const std::vector<double>& u_steps,
                               const QuadratureSpec& quad = {1e-13, 1e-13},
                               double tolerance = 1e-5);
CheckReport central_point_odd(int n, const TestFunction& w, const std::vector<double>& u_steps,
                              const QuadratureSpec& quad = {1e-13, 1e-13},
                              double tolerance = 1e-5);
// |sum(1/2+u) - sum(1/2-u)| at the smallest and largest u; passes when the
// gap shrinks at least linearly in u.
CheckReport central_pole_cancellation(int n, const TestFunction& w,
                                      const std::vector<double>& u_steps,
                                      const QuadratureSpec& quad = {1e-13, 1e-13});

// Spectral moment that the explicit formula leaves unevaluated.
struct SpectralSlot {
  std::string moment;
  cplx coefficient{};
};

struct MainTerms {
  int n = 0;
  cplx s{};
  cplx M_D{};
  cplx M_C{};
  cplx frak_C{};
  double frak_C_upper_half = 0.0;
  // M_D + M_C + frak_C (n even) or M_D + (M_C + frak_C)/2 (n odd).
  cplx computed{};
  std::vector<SpectralSlot> spectral_slots;
  std::string note;
};

// 0 < Re s < 1, s != 1/2.
MainTerms assemble_mainterms(int n, cplx s, const TestFunction& w, const TruncationParams& tp);

}  // namespace zagier

#endif  // ZAGIER_FORMULA_HPP_
