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

#include "zagier/arith.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "zagier/error.hpp"

namespace zagier {
namespace {

constexpr cplx kI{0.0, 1.0};

i64 mulmod(i64 a, i64 b, i64 q) {
  return static_cast<i64>(static_cast<__int128>(a) * b % q);
}

void require_coprime(i64 a, i64 q) {
  if (gcd(a, q) != 1) {
    throw Error(ErrorKind::kBadCoprimality,
                "gcd(" + std::to_string(a) + ", " + std::to_string(q) +
                    ") != 1");
  }
}

// Table of e(k/q) for 0 <= k < q.
std::vector<cplx> root_table(i64 q) {
  std::vector<cplx> t(static_cast<size_t>(q));
  for (i64 k = 0; k < q; ++k) t[static_cast<size_t>(k)] = unit_root(k, q);
  return t;
}

// G(a; q) through the classical square-root evaluations.
cplx gauss_zero_closed(i64 a, i64 q) {
  if (q == 1) return 1.0;
  const double root = std::sqrt(static_cast<double>(q));
  if (q % 2 == 1) {
    const cplx eps = (q % 4 == 1) ? cplx(1.0) : kI;
    return static_cast<double>(jacobi(mod(a, q), q)) * eps * root;
  }
  if (q % 4 == 2) return 0.0;
  const i64 ar = mod(a, q);
  const cplx ia = (ar % 4 == 1) ? kI : -kI;
  return (1.0 + ia) * static_cast<double>(jacobi(q, ar)) * root;
}

std::vector<i64> odd_divisors_of_square(i64 n) {
  std::vector<i64> divs{1};
  for (auto [p, e] : factorize(n)) {
    if (p == 2) continue;
    const size_t base = divs.size();
    i64 pk = 1;
    for (int j = 1; j <= 2 * e; ++j) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

double ExpSum::rounding_bound() const {
  return 16.0 * std::numeric_limits<double>::epsilon() *
         static_cast<double>(terms > 0 ? terms : 1);
}

Character::Character(i64 modulus) : modulus_(modulus) {
  if (modulus <= 0 || modulus % 4 != 0) {
    throw Error(ErrorKind::kBadModulus,
                "character level must be a positive multiple of 4");
  }
}

int Character::operator()(i64 m) const {
  return gcd(m, modulus_) == 1 ? chi4(m) : 0;
}

int chi4(i64 m) {
  const i64 r = mod(m, 4);
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 mod(i64 a, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "modulus must be >= 1");
  const i64 r = a % q;
  return r < 0 ? r + q : r;
}

i64 mod_inverse(i64 a, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "modulus must be positive");
  if (q == 1) return 0;
  i64 old_r = mod(a, q), r = q;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::kNonInvertible,
                std::to_string(a) + " is not invertible mod " +
                    std::to_string(q));
  }
  return mod(old_s, q);
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) {
    throw Error(ErrorKind::kBadParam, "Jacobi symbol needs odd n > 0");
  }
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n <= 0) throw Error(ErrorKind::kBadParam, "factorize needs n >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> divs{1};
  for (auto [p, e] : factorize(n)) {
    const size_t base = divs.size();
    i64 pk = 1;
    for (int j = 1; j <= e; ++j) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

int mobius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

int euler_phi(i64 n) {
  i64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return static_cast<int>(phi);
}

cplx unit_root(i64 num, i64 den) {
  i64 r = mod(num, den);
  if (2 * r > den) r -= den;
  if (r == 0) return 1.0;
  if (2 * r == den) return -1.0;
  if (4 * r == den) return kI;
  if (4 * r == -den) return -kI;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

i64 b_count(i64 q, i64 D) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "b_count needs q >= 1");
  const i64 m = 4 * q;
  const i64 target = mod(D, m);
  i64 count = 0;
  i64 sq = 0;  // x^2 mod 4q
  for (i64 x = 0; x < 2 * q; ++x) {
    if (sq == target) ++count;
    sq = (sq + 2 * x + 1) % m;
  }
  return count;
}

i64 sqrt_count_prime_power(i64 D, i64 p, int e) {
  if (p < 2 || e < 1) throw Error(ErrorKind::kBadParam, "need a prime p and e >= 1");
  i64 pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  i64 r = mod(D, pe);
  i64 half = 1;  // p^{floor(k/2)}
  if (r == 0) {
    for (int i = 0; i < e / 2; ++i) half *= p;
    return half;
  }
  int k = 0;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (k % 2 == 1) return 0;
  for (int i = 0; i < k / 2; ++i) half *= p;
  const int j = e - k;
  if (p != 2) return half * (1 + jacobi(r % p, p));
  if (j == 1) return half;
  if (j == 2) return r % 4 == 1 ? 2 * half : 0;
  return r % 8 == 1 ? 4 * half : 0;
}

i64 b_count_local(i64 q, i64 D) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "b_count needs q >= 1");
  int a = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++a;
  }
  i64 count = sqrt_count_prime_power(D, 2, a + 2) / 2;
  if (q == 1 || count == 0) return count;
  for (auto [p, e] : factorize(q)) {
    count *= sqrt_count_prime_power(D, p, e);
    if (count == 0) break;
  }
  return count;
}

cplx sigma_twisted(cplx s, i64 n) {
  cplx acc = 0.0;
  for (i64 d : divisors(n)) {
    const int c = chi4(d);
    if (c != 0) acc += static_cast<double>(c) * std::exp(s * std::log(static_cast<double>(d)));
  }
  return acc;
}

cplx sigma_twisted_deriv(cplx s, i64 n) {
  cplx acc = 0.0;
  for (i64 d : divisors(n)) {
    const int c = chi4(d);
    if (c == 0 || d == 1) continue;
    const double ld = std::log(static_cast<double>(d));
    acc += static_cast<double>(c) * ld * std::exp(s * ld);
  }
  return acc;
}

cplx sigma_twisted_square(cplx s, i64 n) {
  cplx acc = 0.0;
  for (i64 d : odd_divisors_of_square(n)) {
    acc += static_cast<double>(chi4(d)) * std::exp(s * std::log(static_cast<double>(d)));
  }
  return acc;
}

cplx sigma_twisted_square_deriv(cplx s, i64 n) {
  cplx acc = 0.0;
  for (i64 d : odd_divisors_of_square(n)) {
    if (d == 1) continue;
    const double ld = std::log(static_cast<double>(d));
    acc += static_cast<double>(chi4(d)) * ld * std::exp(s * ld);
  }
  return acc;
}

ExpSum gauss_quadratic_brute(i64 a, i64 n, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "Gauss sum needs q >= 1");
  require_coprime(a, q);
  const i64 ar = mod(a, q), nr = mod(n, q);
  const auto roots = root_table(q);
  cplx acc = 0.0;
  for (i64 x = 0; x < q; ++x) {
    const i64 v = (mulmod(ar, mulmod(x, x, q), q) + mulmod(nr, x, q)) % q;
    acc += roots[static_cast<size_t>(v)];
  }
  return {acc, q};
}

ExpSum gauss_quadratic_closed(i64 a, i64 n, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "Gauss sum needs q >= 1");
  require_coprime(a, q);
  const i64 nr = mod(n, 4 * q);
  if (q % 2 == 1) {
    const i64 inv = mod_inverse(mulmod(4, mod(a, q), q), q);
    const i64 shift = mulmod(inv, mulmod(nr % q, nr % q, q), q);
    return {unit_root(-shift, q) * gauss_zero_closed(a, q), q};
  }
  if (n % 2 == 0) {
    if (q % 4 == 2) return {0.0, q};
    const i64 h = mod(n / 2, q);
    const i64 shift = mulmod(mod_inverse(a, q), mulmod(h, h, q), q);
    return {unit_root(-shift, q) * gauss_zero_closed(a, q), q};
  }
  if (q % 4 == 0) return {0.0, q};
  const i64 r = q / 2;
  if (r == 1) return {2.0, q};
  const i64 inv = mod_inverse(mulmod(8, mod(a, r), r), r);
  const i64 nn = nr % r;
  const i64 shift = mulmod(inv, mulmod(nn, nn, r), r);
  return {2.0 * unit_root(-shift, r) * gauss_zero_closed(2 * a, r), q};
}

ExpSum gauss_char_sum_brute(i64 m, i64 q) {
  if (q <= 0 || q % 4 != 0) {
    throw Error(ErrorKind::kBadModulus, "character sum needs 4 | q");
  }
  const i64 mr = mod(m, q);
  cplx acc = 0.0;
  i64 terms = 0;
  for (i64 u = 1; u < q; u += 2) {
    if (gcd(u, q) != 1) continue;
    acc += static_cast<double>(chi4(u)) * unit_root(mulmod(mr, u, q), q);
    ++terms;
  }
  return {acc, terms};
}

ExpSum gauss_char_sum(i64 m, i64 q, i64 check_up_to) {
  if (q <= 0 || q % 4 != 0) {
    throw Error(ErrorKind::kBadModulus, "character sum needs 4 | q");
  }
  const i64 q4 = q / 4;
  const i64 g = gcd(m, q4);
  i64 acc = 0;
  for (i64 d : divisors(g)) {
    const i64 e = q4 / d;
    acc += d * chi4(e) * chi4(m / d) * mobius(e);
  }
  const ExpSum closed{cplx(0.0, 2.0 * static_cast<double>(acc)),
                      static_cast<i64>(euler_phi(q))};
  if (q <= check_up_to) {
    const ExpSum brute = gauss_char_sum_brute(m, q);
    if (std::abs(brute.value - closed.value) > 1e-9 * (1.0 + static_cast<double>(q))) {
      throw ToleranceNotMet("character Gauss sum closed form disagrees with unit sum",
                            closed.value, std::abs(brute.value - closed.value));
    }
  }
  return closed;
}

double kloosterman(i64 m, i64 n, i64 c) {
  if (c <= 0) throw Error(ErrorKind::kBadParam, "Kloosterman modulus must be >= 1");
  if (c == 1) return 1.0;
  const i64 mr = mod(m, c), nr = mod(n, c);
  double acc = 0.0;
  for (i64 a = 1; a < c; ++a) {
    if (gcd(a, c) != 1) continue;
    const i64 ab = mod_inverse(a, c);
    const i64 v = (mulmod(a, mr, c) + mulmod(ab, nr, c)) % c;
    acc += unit_root(v, c).real();
  }
  return acc;
}

ExpSum kloosterman_inf_inf(i64 m, i64 n, i64 c, const Character& chi) {
  if (c <= 0) throw Error(ErrorKind::kBadParam, "Kloosterman modulus must be >= 1");
  const i64 mr = mod(m, c), nr = mod(n, c);
  cplx acc = 0.0;
  i64 terms = 0;
  for (i64 a = 0; a < c; ++a) {
    if (gcd(a, c) != 1) continue;
    const i64 b = mod_inverse(a, c);
    ++terms;
    const int x = chi(b);
    if (x == 0) continue;
    const i64 v = (mulmod(a, mr, c) + mulmod(b, nr, c)) % c;
    acc += static_cast<double>(x) * unit_root(v, c);
  }
  return {acc, terms};
}

ExpSum kloosterman_inf_zero(i64 m, i64 n, i64 c, const Character& chi) {
  if (c <= 0) throw Error(ErrorKind::kBadParam, "Kloosterman modulus must be >= 1");
  const i64 N = chi.modulus();
  require_coprime(c, N);
  const i64 nbar = mod_inverse(N, c);
  const double s = kloosterman(mulmod(nbar, mod(m, c), c), n, c);
  return {static_cast<double>(chi(c)) * s, c};
}

ExpSum K_brute(i64 n, i64 l, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "K needs q >= 1");
  cplx acc = 0.0;
  for (i64 a = 0; a < q; ++a) {
    if (gcd(a, q) != 1) continue;
    const i64 b = mod_inverse(a, q);
    acc += gauss_quadratic_brute(a, n, q).value * gauss_quadratic_brute(b, l, q).value;
  }
  return {acc, q * q * q};
}

ExpSum K_closed(i64 n, i64 l, i64 q) {
  if (q <= 0) throw Error(ErrorKind::kBadParam, "K needs q >= 1");
  const double qd = static_cast<double>(q);
  if (q % 2 == 1) {
    const i64 i4 = mod_inverse(4, q);
    const i64 nn = mod(n, q), ll = mod(l, q);
    const double s = kloosterman(mulmod(i4, mulmod(nn, nn, q), q),
                                 mulmod(i4, mulmod(ll, ll, q), q), q);
    return {qd * chi4(q) * s, q * q};
  }
  if ((n + l) % 2 != 0) return {0.0, q * q};
  if (n % 2 == 0) {
    if (q % 4 == 2) return {0.0, q * q};
    const i64 hn = mod(n / 2, q), hl = mod(l / 2, q);
    const i64 hn2 = mulmod(hn, hn, q), hl2 = mulmod(hl, hl, q);
    cplx acc = 0.0;
    for (i64 a = 1; a < q; a += 2) {
      if (gcd(a, q) != 1) continue;
      const i64 b = mod_inverse(a, q);
      const i64 v = (mulmod(a, hl2, q) + mulmod(b, hn2, q)) % q;
      acc += static_cast<double>(chi4(a)) * unit_root(-v, q);
    }
    return {cplx(0.0, 2.0 * qd) * acc, q * q};
  }
  if (q % 4 == 0) return {0.0, q * q};
  const i64 r = q / 2;
  if (r == 1) return {2.0 * qd, q * q};
  const i64 i8 = mod_inverse(8, r);
  const i64 nn = mod(n, r), ll = mod(l, r);
  const double s = kloosterman(mulmod(i8, mulmod(nn, nn, r), r),
                               mulmod(i8, mulmod(ll, ll, r), r), r);
  return {2.0 * qd * chi4(r) * s, q * q};
}

i64 ramanujan_sum_units(i64 m, i64 C) {
  if (C <= 0) throw Error(ErrorKind::kBadParam, "Ramanujan sum needs C >= 1");
  const i64 mr = mod(m, C);
  double acc = 0.0;
  for (i64 D = 0; D < C; ++D) {
    if (gcd(D, C) != 1) continue;
    acc += unit_root(mulmod(mr, D, C), C).real();
  }
  return static_cast<i64>(std::llround(acc));
}

i64 ramanujan_sum_divisors(i64 m, i64 C) {
  if (C <= 0) throw Error(ErrorKind::kBadParam, "Ramanujan sum needs C >= 1");
  const i64 g = gcd(m, C);
  i64 acc = 0;
  for (i64 d : divisors(g)) acc += d * mobius(C / d);
  return acc;
}

i64 ramanujan_sum(i64 m, i64 C) {
  const i64 by_divisors = ramanujan_sum_divisors(m, C);
  const i64 by_units = ramanujan_sum_units(m, C);
  if (by_divisors != by_units) {
    throw Error(ErrorKind::kToleranceNotMet,
                "Ramanujan sum forms disagree at m=" + std::to_string(m) +
                    ", C=" + std::to_string(C));
  }
  return by_divisors;
}

}  // namespace zagier
