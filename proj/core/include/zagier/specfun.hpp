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

#ifndef ZAGIER_SPECFUN_HPP_
#define ZAGIER_SPECFUN_HPP_

#include <complex>
#include <functional>
#include <optional>

namespace zagier {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kCatalan = 0.91596559417721901505460351493238411;

// Gamma function family. gamma() throws PoleAt at nonpositive integers;
// rgamma() = 1/Gamma is entire and returns 0 there.
cplx lgamma(cplx z);
cplx gamma(cplx z);
cplx rgamma(cplx z);
cplx digamma(cplx z);
// Real-argument overloads keep unqualified calls away from the C library's
// gamma()/lgamma().
inline cplx lgamma(double x) { return lgamma(cplx(x)); }
inline cplx gamma(double x) { return gamma(cplx(x)); }
inline cplx rgamma(double x) { return rgamma(cplx(x)); }
inline cplx digamma(double x) { return digamma(cplx(x)); }
// sin(pi z) with the integer part of Re z removed exactly.
cplx sinpi(cplx z);
cplx cospi(cplx z);

// Hurwitz zeta by Euler-Maclaurin summation, a > 0, s != 1.
cplx hurwitz_zeta(cplx s, double a);
cplx zeta(cplx s);

// Dirichlet L-function of chi_4. The default route is the Hurwitz
// combination 4^{-s}(zeta(s,1/4) - zeta(s,3/4)); the alternating route
// accelerates sum (-1)^k (2k+1)^{-s} and is valid for Re s > 0.
cplx L_chi4(cplx s);
cplx L_chi4_alternating(cplx s);
cplx L_chi4_deriv(cplx s);
// Central differences of L_chi4 at h and h/2 with one Richardson step.
cplx L_chi4_deriv_fd(cplx s, double h = 1e-5);

// Gauss hypergeometric 2F1(a, b; c; x) for 0 <= x < 1. The second overload
// takes 1 - x separately so callers near x = 1 keep full precision.
cplx hyp2f1(cplx a, cplx b, cplx c, double x);
cplx hyp2f1(cplx a, cplx b, cplx c, double x, double one_minus_x);

// Bessel J_nu(x), x > 0. Nonnegative integer orders go through the standard
// library; other complex orders use the ascending series for small x, the
// Hankel expansion for large x, and in between Miller's backward recurrence
// (|Im nu| <= 4) or integration of Bessel's equation from the series region.
cplx bessel_j(cplx order, double x);
cplx bessel_j_series(cplx order, double x);
cplx bessel_j_miller(cplx order, double x);
cplx bessel_j_ode(cplx order, double x);
// J_{i mu}(x) + J_{-i mu}(x) = 2 Re J_{i mu}(x) for real mu, x.
double bessel_j_imag_sum(double mu, double x);

// Quadrature.
struct QuadratureSpec {
  enum class Cutoff { kFixed, kTailEstimate };

  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  Cutoff cutoff = Cutoff::kTailEstimate;
  double fixed_cutoff = 0.0;
  // Initial panel width for oscillatory integrands (0: one panel).
  double panel_width = 0.0;
};

struct EvalResult {
  cplx value{};
  double error_estimate = 0.0;
};

enum class Singular { kNone, kLo, kHi, kBoth };

using Integrand = std::function<cplx(double)>;

// Adaptive Gauss-Kronrod (21 points) for smooth integrands; double
// exponential substitution when an endpoint is flagged singular.
EvalResult integrate_finite(const Integrand& f, double lo, double hi,
                            const QuadratureSpec& spec,
                            Singular singular = Singular::kNone);

// Integrand that also receives the distances x - lo and hi - x, exact even
// where x itself rounds to an endpoint.
using EndpointIntegrand = std::function<cplx(double x, double to_lo, double to_hi)>;

// Double exponential rule for singularities at either endpoint. Write the
// singular factor in terms of to_lo / to_hi to keep full precision there.
EvalResult integrate_endpoint_singular(const EndpointIntegrand& f, double lo, double hi,
                                       const QuadratureSpec& spec);

// A certified decay bound: tail(X) >= int_X^inf |f(x)| dx.
struct Envelope {
  std::function<double(double)> tail;
};

EvalResult integrate_semi_infinite(const Integrand& f, double lo,
                                   const QuadratureSpec& spec,
                                   const std::optional<Envelope>& envelope);

}  // namespace zagier

#endif  // ZAGIER_SPECFUN_HPP_
