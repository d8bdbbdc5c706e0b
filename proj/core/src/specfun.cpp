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

#include "zagier/specfun.hpp"

#include <array>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zagier/error.hpp"

namespace zagier {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

// B_{2k}/(2k)! for k = 1..kBernoulliTerms.
constexpr int kBernoulliTerms = 60;

const std::array<double, kBernoulliTerms + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms + 1> t{};
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      t[k] = boost::math::bernoulli_b2n<double>(k) /
             boost::math::factorial<double>(2 * k);
    }
    return t;
  }();
  return table;
}

double bernoulli_b2n(int k) { return boost::math::bernoulli_b2n<double>(k); }

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_nonnegative_integer(cplx z) {
  return z.imag() == 0.0 && z.real() >= 0.0 && z.real() == std::floor(z.real());
}

// (e^w - 1)/w.
cplx expm1_over(cplx w) {
  if (std::abs(w) < 0.5) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 2; k < 40; ++k) {
      term *= w / static_cast<double>(k);
      sum += term;
      if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return sum;
  }
  return (std::exp(w) - 1.0) / w;
}

cplx cpow(double base, cplx e) { return std::exp(e * std::log(base)); }

// Euler-Maclaurin remainder pieces at x for the summand (k + a)^{-s}.
cplx em_corrections(cplx s, double x) {
  const auto& bf = bernoulli_over_factorial();
  cplx acc = 0.5 * cpow(x, -s);
  cplx t = s * cpow(x, -s - 1.0);
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    const cplx term = bf[j] * t;
    acc += term;
    if (std::abs(term) < kEps * std::abs(acc)) break;
    t *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j)) * inv_x2;
  }
  return acc;
}

int em_cutoff(cplx s) { return 16 + static_cast<int>(std::ceil(std::abs(s))); }

// Sum of (-1)^k a_k by Cohen-Rodriguez Villegas-Zagier acceleration.
template <class Term>
cplx alternating_sum(Term a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d;
  cplx s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

cplx gauss_series(cplx a, cplx b, cplx c, double x) {
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < 20000; ++k) {
    const double kk = static_cast<double>(k);
    const cplx ratio = (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * x;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= kEps * std::abs(sum) && std::abs(ratio) < 1.0) return sum;
  }
  throw ToleranceNotMet("hyp2f1 series did not converge", sum, std::abs(term));
}

// 2F1 near x = 1 when c - a - b = m is an integer (m >= 0).
cplx hyp2f1_log(cplx a, cplx b, int m, double omx) {
  const double log_omx = std::log(omx);
  const cplx c = a + b + static_cast<double>(m);
  const cplx gc = gamma(c);
  cplx finite = 0.0;
  if (m > 0) {
    cplx term = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += term;
      const double nn = static_cast<double>(n);
      term *= (a + nn) * (b + nn) / ((nn + 1.0) * (1.0 - m + nn)) * omx;
    }
    finite *= std::tgamma(static_cast<double>(m)) * gc * rgamma(a + static_cast<double>(m)) *
              rgamma(b + static_cast<double>(m));
  }
  const cplx ra = rgamma(a), rb = rgamma(b);
  if (ra == 0.0 || rb == 0.0) return finite;
  // psi(n+1), psi(n+m+1), psi(a+n+m), psi(b+n+m) advanced together.
  double psi_n1 = -kEulerGamma;
  double psi_nm1 = -kEulerGamma;
  for (int k = 1; k <= m; ++k) psi_nm1 += 1.0 / k;
  cplx psi_a = digamma(a + static_cast<double>(m));
  cplx psi_b = digamma(b + static_cast<double>(m));
  cplx coef = 1.0 / std::tgamma(static_cast<double>(m) + 1.0);
  cplx sum = 0.0;
  for (int n = 0; n < 20000; ++n) {
    const cplx bracket = m == 0 ? (2.0 * psi_n1 - psi_a - psi_b - log_omx)
                                : (log_omx - psi_n1 - psi_nm1 + psi_a + psi_b);
    const cplx term = coef * bracket;
    sum += term;
    if (n > 2 && std::abs(term) <= kEps * std::abs(sum)) break;
    const double nn = static_cast<double>(n);
    coef *= (a + static_cast<double>(m) + nn) * (b + static_cast<double>(m) + nn) /
            ((nn + 1.0) * (nn + m + 1.0)) * omx;
    psi_n1 += 1.0 / (nn + 1.0);
    psi_nm1 += 1.0 / (nn + m + 1.0);
    psi_a += 1.0 / (a + static_cast<double>(m) + nn);
    psi_b += 1.0 / (b + static_cast<double>(m) + nn);
  }
  if (m == 0) return gc * ra * rb * sum;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return finite - sign * std::pow(omx, m) * gc * ra * rb * sum;
}

cplx hankel_or_nan(cplx nu, double x) {
  const cplx mu = 4.0 * nu * nu;
  cplx p = 0.0, q = 0.0;
  cplx term = 1.0;
  double prev = std::abs(term);
  bool converged = false;
  for (int k = 0; k < 200; ++k) {
    const double mag = std::abs(term);
    if (k > 0 && mag > prev) break;
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (mag < 1e-16 * (std::abs(p) + std::abs(q))) {
      converged = true;
      break;
    }
    prev = mag;
    const double odd = 2.0 * k + 1.0;
    term *= (mu - odd * odd) / (8.0 * (k + 1.0) * x);
  }
  if (!converged) return {std::nan(""), 0.0};
  const cplx omega = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

}  // namespace

cplx sinpi(cplx z) {
  const double n = std::round(z.real());
  const double f = z.real() - n;
  const double y = kPi * z.imag();
  const cplx v(std::sin(kPi * f) * std::cosh(y), std::cos(kPi * f) * std::sinh(y));
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

cplx cospi(cplx z) {
  const double n = std::round(z.real());
  const double f = z.real() - n;
  const double y = kPi * z.imag();
  const double c = std::abs(f) == 0.5 ? 0.0 : std::cos(kPi * f);
  const cplx v(c * std::cosh(y), -std::sin(kPi * f) * std::sinh(y));
  return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

namespace {

// log sin(pi z), without overflow for large |Im z|.
cplx log_sinpi(cplx z) {
  const cplx i(0.0, 1.0);
  if (std::abs(z.imag()) < 20.0) return std::log(sinpi(z));
  if (z.imag() > 0.0) return -i * kPi * z + std::log((std::exp(2.0 * i * kPi * z) - 1.0) / (2.0 * i));
  return i * kPi * z + std::log((1.0 - std::exp(-2.0 * i * kPi * z)) / (2.0 * i));
}

}  // namespace

cplx lgamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorKind::kPoleAt, "Gamma pole at " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sinpi(z) - lgamma(1.0 - z);
  }
  cplx shift = 0.0;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (int k = 1; k <= 12; ++k) {
    series += bernoulli_b2n(k) / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

cplx gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorKind::kPoleAt, "Gamma pole at " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    if (std::abs(z.imag()) < 20.0) return kPi / (sinpi(z) * std::exp(lgamma(1.0 - z)));
    return std::exp(std::log(kPi) - log_sinpi(z) - lgamma(1.0 - z));
  }
  return std::exp(lgamma(z));
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) {
    if (std::abs(z.imag()) < 20.0) return sinpi(z) * std::exp(lgamma(1.0 - z)) / kPi;
    return std::exp(log_sinpi(z) + lgamma(1.0 - z) - std::log(kPi));
  }
  return std::exp(-lgamma(z));
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw Error(ErrorKind::kPoleAt, "digamma pole at " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) return digamma(1.0 - z) - kPi * cospi(z) / sinpi(z);
  cplx shift = 0.0;
  while (z.real() < 12.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const cplx inv2 = 1.0 / (z * z);
  cplx series = 0.0;
  cplx power = inv2;
  for (int k = 1; k <= 12; ++k) {
    series += bernoulli_b2n(k) / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (s == cplx(1.0)) throw Error(ErrorKind::kPoleAt, "zeta pole at s = 1");
  if (!(a > 0.0)) throw Error(ErrorKind::kBadParam, "Hurwitz zeta needs a > 0");
  const int n = em_cutoff(s);
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) sum += cpow(k + a, -s);
  const double x = n + a;
  return sum + cpow(x, 1.0 - s) / (s - 1.0) + em_corrections(s, x);
}

cplx zeta(cplx s) {
  if (s == cplx(1.0)) throw Error(ErrorKind::kPoleAt, "zeta pole at s = 1");
  if (s.real() < 0.0) {
    return cpow(2.0, s) * cpow(kPi, s - 1.0) * sinpi(0.5 * s) * gamma(1.0 - s) *
           zeta(1.0 - s);
  }
  return hurwitz_zeta(s, 1.0);
}

cplx L_chi4(cplx s) {
  if (s.real() < 0.0) {
    return cpow(4.0 / kPi, 0.5 - s) * gamma(1.0 - 0.5 * s) * rgamma(0.5 * (s + 1.0)) *
           L_chi4(1.0 - s);
  }
  const int n = em_cutoff(s);
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) sum += cpow(k + 0.25, -s) - cpow(k + 0.75, -s);
  const double x1 = n + 0.25, x2 = n + 0.75;
  const double la = std::log(x1), lb = std::log(x2);
  const cplx u = 1.0 - s;
  const cplx integral = -std::exp(u * lb) * (la - lb) * expm1_over(u * (la - lb));
  sum += integral + em_corrections(s, x1) - em_corrections(s, x2);
  return cpow(4.0, -s) * sum;
}

cplx L_chi4_alternating(cplx s) {
  if (s.real() <= 0.0) {
    throw Error(ErrorKind::kOutOfDomain, "alternating route needs Re s > 0");
  }
  return alternating_sum([&](int k) { return cpow(2.0 * k + 1.0, -s); }, 64);
}

cplx L_chi4_deriv_fd(cplx s, double h) {
  auto central = [&](double step) {
    return (L_chi4(s + step) - L_chi4(s - step)) / (2.0 * step);
  };
  return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

cplx L_chi4_deriv(cplx s) {
  if (s.real() > 0.2 && std::abs(s.imag()) <= 10.0) {
    return alternating_sum(
        [&](int k) {
          const double v = 2.0 * k + 1.0;
          return -std::log(v) * cpow(v, -s);
        },
        64);
  }
  return L_chi4_deriv_fd(s);
}

cplx hyp2f1(cplx a, cplx b, cplx c, double x) { return hyp2f1(a, b, c, x, 1.0 - x); }

cplx hyp2f1(cplx a, cplx b, cplx c, double x, double omx) {
  if (x < 0.0) throw Error(ErrorKind::kOutOfDomain, "hyp2f1 needs x >= 0");
  if (!(omx > 0.0)) throw Error(ErrorKind::kDivergent, "hyp2f1 needs x < 1");
  if (x >= 1.0) x = 1.0 - omx;
  if (is_nonpositive_integer(c)) {
    throw Error(ErrorKind::kBadParam, "hyp2f1 needs c off the nonpositive integers");
  }
  if (x == 0.0) return 1.0;
  if (x <= 0.5) return gauss_series(a, b, c, x);
  const cplx m = c - a - b;
  const double mr = std::round(m.real());
  if (std::abs(m.imag()) < 1e-8 && std::abs(m.real() - mr) < 1e-8) {
    const int mi = static_cast<int>(mr);
    if (mi < 0) {
      // Euler transformation flips the sign of c - a - b.
      return std::exp(m * std::log(omx)) * hyp2f1_log(c - a, c - b, -mi, omx);
    }
    return hyp2f1_log(a, b, mi, omx);
  }
  const cplx gc = gamma(c);
  const cplx first = gc * gamma(m) * rgamma(c - a) * rgamma(c - b) *
                     gauss_series(a, b, 1.0 - m, omx);
  const cplx second = gc * gamma(-m) * rgamma(a) * rgamma(b) *
                      std::exp(m * std::log(omx)) *
                      gauss_series(c - a, c - b, 1.0 + m, omx);
  return first + second;
}

cplx bessel_j_series(cplx order, double x) {
  using lc = std::complex<long double>;
  const cplx lead = std::exp(order * std::log(0.5 * x)) * rgamma(order + 1.0);
  const lc nu(order.real(), order.imag());
  const long double q = -0.25L * x * x;
  lc term(1.0L), sum(1.0L);
  for (int k = 0; k < 2000; ++k) {
    term *= q / ((k + 1.0L) * (nu + static_cast<long double>(k + 1)));
    sum += term;
    if (std::abs(term) < 1e-21L * std::abs(sum) && k > x) break;
  }
  return lead * cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

cplx bessel_j_miller(cplx order, double x) {
  const cplx nu = order;
  int top = static_cast<int>(std::ceil(x + 40.0 + 2.0 * std::abs(nu) + 10.0 * std::cbrt(x)));
  if (top % 2 == 1) ++top;
  std::vector<cplx> p(static_cast<size_t>(top / 2 + 2));
  p[1] = 1.0;
  for (int k = 1; k + 1 < static_cast<int>(p.size()); ++k) {
    p[k + 1] = p[k] * (nu + static_cast<double>(k)) / (k + 1.0);
  }
  cplx f_next = 0.0, f = 1e-30, norm = 0.0;
  for (int j = top; j >= 1; --j) {
    if (j % 2 == 0) norm += (nu + static_cast<double>(j)) * p[j / 2] * f;
    const cplx f_prev = 2.0 * (nu + static_cast<double>(j)) / x * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > 1e250) {
      f *= 1e-250;
      f_next *= 1e-250;
      norm *= 1e-250;
    }
  }
  const cplx total = gamma(nu + 1.0) * (f + norm);
  return f * std::exp(nu * std::log(0.5 * x)) / total;
}

cplx bessel_j_ode(cplx order, double x) {
  constexpr double kStart = 8.0;
  if (x <= kStart) return bessel_j_series(order, x);
  using State = std::array<double, 4>;
  const cplx nu2 = order * order;
  const cplx j0 = bessel_j_series(order, kStart);
  const cplx d0 = bessel_j_series(order - 1.0, kStart) - order / kStart * j0;
  State y{j0.real(), j0.imag(), d0.real(), d0.imag()};
  auto rhs = [&](const State& st, State& dy, double t) {
    const cplx v(st[0], st[1]), dv(st[2], st[3]);
    const cplx acc = -dv / t - (1.0 - nu2 / (t * t)) * v;
    dy = {dv.real(), dv.imag(), acc.real(), acc.imag()};
  };
  namespace ode = boost::numeric::odeint;
  const double scale = std::abs(j0) + std::abs(d0);
  ode::integrate_adaptive(
      ode::make_controlled(1e-14 * scale, 1e-13, ode::runge_kutta_fehlberg78<State>()), rhs, y,
      kStart, x, 0.05);
  return {y[0], y[1]};
}

cplx bessel_j(cplx order, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::kOutOfDomain, "Bessel J needs finite x >= 0");
  }
  if (std::abs(order) > 60.0) {
    throw Error(ErrorKind::kOutOfDomain, "Bessel J order beyond |nu| <= 60");
  }
  if (is_nonnegative_integer(order)) return std::cyl_bessel_j(order.real(), x);
  if (x == 0.0) {
    if (order.real() > 0.0) return 0.0;
    throw Error(ErrorKind::kOutOfDomain, "Bessel J at x = 0 needs Re nu > 0");
  }
  if (x <= 2.0) return bessel_j_series(order, x);
  if (x >= 20.0 + std::norm(order)) {
    const cplx h = hankel_or_nan(order, x);
    if (!std::isnan(h.real())) return h;
  }
  if (std::abs(order.imag()) <= 4.0) return bessel_j_miller(order, x);
  return bessel_j_ode(order, x);
}

double bessel_j_imag_sum(double mu, double x) {
  return 2.0 * bessel_j(cplx(0.0, mu), x).real();
}

}  // namespace zagier
