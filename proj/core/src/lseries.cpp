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


#include "zagier/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zagier/error.hpp"

namespace zagier {
namespace {

cplx cpow(double base, cplx e) { return std::exp(e * std::log(base)); }

// sum_{e >= 0} c_e p^{-es} for the local counts c_e of b at p, times the
// local factor (1 - p^{-s})/(1 - p^{-2s}) of zeta(2s)/zeta(s).
cplx local_factor(std::int64_t D, std::int64_t p, cplx s) {
  const cplx x = cpow(static_cast<double>(p), -s);
  const double xr = std::abs(x);
  // At p = 2 the e = 0 term is b_1(D) = N(4)/2, which vanishes for D = 2, 3 mod 4.
  cplx sum = p == 2 ? sqrt_count_prime_power(D, 2, 2) / 2.0 : 1.0;
  cplx xe = 1.0;
  for (int e = 1; e < 200; ++e) {
    xe *= x;
    const double c = p == 2 ? sqrt_count_prime_power(D, 2, e + 2) / 2.0
                            : static_cast<double>(sqrt_count_prime_power(D, p, e));
    sum += c * xe;
    // Counts grow at most like p^{e/2}.
    if (std::pow(std::sqrt(static_cast<double>(p)) * xr, e) * 4.0 < 1e-18) break;
    if (std::pow(static_cast<double>(p), e + 2) > 1e17) break;
  }
  return sum * (1.0 - x) / (1.0 - x * x);
}

}  // namespace

SeriesValue zagier_L(std::int64_t D, cplx s, std::int64_t q_max) {
  const double sigma = s.real();
  if (q_max < 1) throw Error(ErrorKind::kBadParam, "q_max must be positive");
  if (!(sigma > 1.0)) throw Error(ErrorKind::kOutOfDomain, "series needs Re s > 1");
  const double theta = D == 0 ? 0.5 : 0.1;
  if (!(sigma > 1.0 + theta)) {
    throw Error(ErrorKind::kDivergent, "b_q(0) grows like sqrt(q); needs Re s > 3/2");
  }
  const cplx zs = zeta(s);
  if (std::abs(zs) < 1e-12) throw Error(ErrorKind::kPoleAt, "zeta(s) vanishes");
  const cplx pref = zeta(2.0 * s) / zs;
  cplx sum = 0.0;
  double growth = 0.0;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const std::int64_t b = b_count_local(q, D);
    if (b == 0) continue;
    const double qd = static_cast<double>(q);
    sum += static_cast<double>(b) * cpow(qd, -s);
    growth = std::max(growth, b / std::pow(qd, theta));
  }
  const double qm = static_cast<double>(q_max);
  SeriesValue out;
  out.value = pref * sum;
  out.terms_used = q_max;
  out.tail_bound = std::abs(pref) * growth * std::pow(qm, 1.0 + theta - sigma) / (sigma - 1.0 - theta);
  out.heuristic = true;
  return out;
}

cplx zagier_L_euler(std::int64_t D, cplx s) {
  const double sigma = s.real();
  if (!(sigma > 1.0)) throw Error(ErrorKind::kOutOfDomain, "Euler product needs Re s > 1");
  if (D == 0) {
    if (!(sigma > 1.5)) throw Error(ErrorKind::kDivergent, "D = 0 needs Re s > 3/2");
    // Odd p contribute 1/(1 - p^{1-2s}).
    return zeta(2.0 * s - 1.0) * (1.0 - cpow(2.0, 1.0 - 2.0 * s)) * local_factor(0, 2, s);
  }
  const std::int64_t period = 4 * std::abs(D);
  cplx l_value = 0.0;
  for (std::int64_t a = 1; a < period; a += 2) {
    if (gcd(a, D) != 1) continue;
    const int chi = jacobi(mod(D, a), a);
    if (chi == 0) continue;
    l_value += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / period);
  }
  l_value *= cpow(static_cast<double>(period), -s);
  cplx out = l_value * local_factor(D, 2, s);
  std::int64_t rest = std::abs(D);
  while (rest % 2 == 0) rest /= 2;
  if (rest > 1) {
    for (auto [p, e] : factorize(rest)) out *= local_factor(D, p, s);
  }
  return out;
}

cplx Z_closed(cplx z, cplx s) {
  const cplx first = (1.0 - cpow(2.0, 2.0 * s - z)) / (1.0 - cpow(2.0, 2.0 * s - 2.0 * z));
  const cplx denom = zeta(2.0 * z - 2.0 * s);
  if (std::abs(denom) < 1e-14) throw Error(ErrorKind::kPoleAt, "zeta(2z - 2s) vanishes");
  return first * L_chi4(z - s) * zeta(z) * zeta(z - 2.0 * s) / denom;
}

SeriesValue Z_truncated(cplx z, cplx s, std::int64_t n_max) {
  const double excess = z.real() - 1.0 - 2.0 * std::max(0.0, s.real());
  if (!(excess > 0.0)) throw Error(ErrorKind::kDivergent, "needs Re z > 1 + 2 max(Re s, 0)");
  cplx sum = 0.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    sum += sigma_twisted_square(s, n) * cpow(static_cast<double>(n), -z);
  }
  // |sigma_s(chi_4; n^2)| <= d(n^2) n^{2 max(Re s,0)} and d(n^2) <= 3 n^{1/2}
  // is not tight; the declared bound uses d(n^2) << n^{1/10}.
  SeriesValue out;
  out.value = sum;
  out.terms_used = n_max;
  const double theta = 0.1;
  const double e = excess - theta;
  out.tail_bound = e > 0.0 ? 4.0 * std::pow(static_cast<double>(n_max), -e) / e
                           : std::numeric_limits<double>::infinity();
  out.heuristic = true;
  return out;
}

cplx s_scalar(std::int64_t m, cplx s) {
  if (m < 1) throw Error(ErrorKind::kBadParam, "m must be positive");
  return sigma_twisted(1.0 - 2.0 * s, m) / L_chi4(2.0 * s);
}

cplx t_scalar(std::int64_t m, cplx s) {
  if (m < 1) throw Error(ErrorKind::kBadParam, "m must be positive");
  return cplx(0.0, 2.0) * sigma_twisted(2.0 * s - 1.0, m) *
         cpow(static_cast<double>(m), 1.0 - 2.0 * s) / L_chi4(2.0 * s);
}

}  // namespace zagier
