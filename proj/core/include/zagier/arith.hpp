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

#ifndef ZAGIER_ARITH_HPP_
#define ZAGIER_ARITH_HPP_

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace zagier {

using cplx = std::complex<double>;
using i64 = std::int64_t;

// A finite exponential sum together with the number of unit-circle terms that
// went into it. |value| <= terms always holds.
struct ExpSum {
  cplx value{};
  i64 terms = 0;

  // Rounding budget for a sum of `terms` roots of unity.
  double rounding_bound() const;
};

// chi_4 extended to level `modulus`: chi_4(m) if gcd(m, modulus) = 1, else 0.
class Character {
 public:
  explicit Character(i64 modulus = 4);

  int operator()(i64 m) const;
  i64 modulus() const { return modulus_; }

 private:
  i64 modulus_;
};

int chi4(i64 m);
int mobius(i64 n);
i64 gcd(i64 a, i64 b);
i64 mod(i64 a, i64 q);
i64 mod_inverse(i64 a, i64 q);
int jacobi(i64 a, i64 n);
int euler_phi(i64 n);

std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> divisors(i64 n);

// e(num/den) = exp(2 pi i num/den), reduced exactly before the trig call.
cplx unit_root(i64 num, i64 den);

// #{x mod 2q : x^2 = D mod 4q}, by enumeration.
i64 b_count(i64 q, i64 D);
// #{x mod p^e : x^2 = D mod p^e} for a prime p.
i64 sqrt_count_prime_power(i64 D, i64 p, int e);
// b_count assembled from prime-power square-root counts: b_q(D) equals
// N(4q)/2 and N is multiplicative in the modulus.
i64 b_count_local(i64 q, i64 D);

// sigma_s(chi_4; n) = sum_{d | n} chi_4(d) d^s and its s-derivative.
cplx sigma_twisted(cplx s, i64 n);
cplx sigma_twisted_deriv(cplx s, i64 n);
// sigma_s(chi_4; n^2) from the factorisation of n; n may be large.
cplx sigma_twisted_square(cplx s, i64 n);
cplx sigma_twisted_square_deriv(cplx s, i64 n);

// G(a, n; q) = sum_{x mod q} e((a x^2 + n x)/q).
ExpSum gauss_quadratic_brute(i64 a, i64 n, i64 q);
ExpSum gauss_quadratic_closed(i64 a, i64 n, i64 q);

// g(chi; q; m) = sum_{u mod q, (u,q)=1} chi_4(u) e(m u / q), 4 | q.
ExpSum gauss_char_sum_brute(i64 m, i64 q);
// Closed divisor form; cross-checked against the unit sum when q <= check_up_to.
ExpSum gauss_char_sum(i64 m, i64 q, i64 check_up_to = 256);

// S(m, n; c) = sum_{a abar = 1 mod c} e((a m + abar n)/c).
double kloosterman(i64 m, i64 n, i64 c);

// sum_{ab = 1 mod c} e((a m + b n)/c) conj(chi(b)).
ExpSum kloosterman_inf_inf(i64 m, i64 n, i64 c, const Character& chi);
// Cusp pair (inf, 0) at modulus c sqrt(N), N = chi.modulus(), (c, N) = 1:
// conj(chi(c)) S(Nbar m, n; c).
ExpSum kloosterman_inf_zero(i64 m, i64 n, i64 c, const Character& chi);

// K(n, l; q) = sum_{ab = 1 mod q} G(a, n; q) G(b, l; q).
ExpSum K_brute(i64 n, i64 l, i64 q);
ExpSum K_closed(i64 n, i64 l, i64 q);

// sum_{D mod C, (D,C)=1} e(m D / C) in both standard forms.
i64 ramanujan_sum_units(i64 m, i64 C);
i64 ramanujan_sum_divisors(i64 m, i64 C);
// Divisor form, checked against the unit form.
i64 ramanujan_sum(i64 m, i64 C);

}  // namespace zagier

#endif  // ZAGIER_ARITH_HPP_
