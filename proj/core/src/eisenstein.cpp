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


#include "zagier/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zagier/error.hpp"
#include "zagier/specfun.hpp"

namespace zagier {
namespace {

bool valid_level(int N) { return N == 4 || N == 16 || N == 64; }

i64 isqrt_exact(i64 n) {
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int v2(i64 n) {
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

cplx pow_real(double base, cplx s) { return std::exp(s * std::log(base)); }

double delta(i64 d, i64 m) { return m % d == 0 ? 1.0 : 0.0; }

// c * delta_d(m) * t(m/d) / (dN)^{2s}, the recurring t-type term.
cplx t_term(double c, i64 d, double modulus, i64 m, const PhiScalars& sc) {
  if (m % d != 0) return 0.0;
  return c * sc.t_value(m / d) / pow_real(modulus, 2.0 * sc.s());
}

cplx s_term(i64 m, const PhiScalars& sc, double modulus) {
  return sc.s_value(m) / pow_real(modulus, 2.0 * sc.s());
}

// Closed rows for a = infinity.
PhiValue phi_inf(const Cusp& c, i64 m, const PhiScalars& s) {
  const double sign = chi4(-c.u);
  const std::string tag = "N=" + std::to_string(c.N) + ",a=inf,c=" + c.label();
  if (c.N == 4) {
    if (c.is_zero()) return {static_cast<double>(chi4(-1)) * s_term(m, s, 2.0), tag};
    return {s.t_value(m) / pow_real(4.0, 2.0 * s.s()), tag};
  }
  if (c.N == 16) {
    switch (c.f) {
      case 1: return {static_cast<double>(chi4(-1)) * s_term(m, s, 4.0), tag};
      case 2: return {static_cast<double>(chi4(-1)) * unit_root(m, 2) * s_term(m, s, 4.0), tag};
      case 4: return {sign * unit_root(-m * c.u, 4) * s_term(m, s, 4.0), tag};
      case 8: return {t_term(2.0, 2, 8.0, m, s) - t_term(4.0, 4, 16.0, m, s), tag};
      default: return {t_term(4.0, 4, 16.0, m, s), tag};
    }
  }
  switch (c.f) {
    case 1: return {static_cast<double>(chi4(-1)) * s_term(m, s, 8.0), tag};
    case 2: return {static_cast<double>(chi4(-1)) * unit_root(m, 2) * s_term(m, s, 8.0), tag};
    case 4: return {sign * unit_root(-m * c.u, 4) * s_term(m, s, 8.0), tag};
    case 8: return {sign * unit_root(-m * c.u, 8) * s_term(m, s, 8.0), tag};
    case 16:
      return {sign * 4.0 * delta(4, m) * unit_root(-m * c.u, 16) * s_term(m, s, 16.0), tag};
    case 32: return {t_term(8.0, 8, 32.0, m, s) - t_term(16.0, 16, 64.0, m, s), tag};
    default: return {t_term(16.0, 16, 64.0, m, s), tag};
  }
}

// Closed rows for a = 0.
PhiValue phi_zero(const Cusp& c, i64 m, const PhiScalars& s) {
  const std::string tag = "N=" + std::to_string(c.N) + ",a=0,c=" + c.label();
  if (c.N == 4) {
    if (c.is_zero()) return {s.t_value(m) / pow_real(4.0, 2.0 * s.s()), tag};
    return {s_term(m, s, 2.0), tag};
  }
  if (c.N == 16) {
    switch (c.f) {
      case 1: return {t_term(4.0, 4, 16.0, m, s), tag};
      case 2: return {t_term(2.0, 2, 8.0, m, s) - t_term(4.0, 4, 16.0, m, s), tag};
      case 4: return {unit_root(m * c.u, 4) * s_term(m, s, 4.0), tag};
      case 8: return {unit_root(m, 2) * s_term(m, s, 4.0), tag};
      default: return {s_term(m, s, 4.0), tag};
    }
  }
  switch (c.f) {
    case 1: return {t_term(16.0, 16, 64.0, m, s), tag};
    case 2: return {t_term(8.0, 8, 32.0, m, s) - t_term(16.0, 16, 64.0, m, s), tag};
    case 4: return {4.0 * delta(4, m) * unit_root(m * c.u, 16) * s_term(m, s, 16.0), tag};
    case 8: return {unit_root(m * c.u, 8) * s_term(m, s, 8.0), tag};
    case 16: return {unit_root(m * c.u, 4) * s_term(m, s, 8.0), tag};
    case 32: return {unit_root(m, 2) * s_term(m, s, 8.0), tag};
    default: return {s_term(m, s, 8.0), tag};
  }
}

}  // namespace

Cusp Cusp::Make(int N, i64 u, i64 f) {
  if (!valid_level(N)) throw Error(ErrorKind::kBadParam, "level must be 4, 16 or 64");
  if (f <= 0 || N % f != 0) throw Error(ErrorKind::kBadParam, "f must divide N");
  const i64 g = gcd(f, N / f);
  if (gcd(u, g) != 1 || gcd(u, N) != 1) {
    throw Error(ErrorKind::kBadCoprimality, "u must be a unit modulo (f, N/f) and N");
  }
  Cusp c;
  c.N = N;
  c.u = g == 1 ? 1 : mod(u, g);
  c.f = f;
  c.w = c.u * f;
  c.N1 = N / gcd(N, c.w);
  c.N2 = c.N1 / gcd(c.N1, c.w);
  return c;
}

std::string Cusp::label() const {
  if (is_zero()) return "0";
  if (is_infinity()) return "inf";
  return "1/" + std::to_string(w);
}

const char* EisCuspName(EisCusp a) { return a == EisCusp::kInfinity ? "inf" : "0"; }

std::vector<Cusp> enumerate_cusps(int N) {
  if (!valid_level(N)) throw Error(ErrorKind::kBadParam, "level must be 4, 16 or 64");
  std::vector<Cusp> out;
  for (i64 f : divisors(N)) {
    const i64 g = gcd(f, N / f);
    for (i64 u = 1; u <= g; ++u) {
      if (gcd(u, g) == 1 && gcd(u, N) == 1) out.push_back(Cusp::Make(N, u, f));
    }
  }
  return out;
}

Cusp find_cusp(int N, i64 w) {
  for (const Cusp& c : enumerate_cusps(N)) {
    if (c.w == w) return c;
  }
  throw Error(ErrorKind::kBadParam, "no cusp 1/" + std::to_string(w) + " at this level");
}

bool is_singular(const Cusp& c) { return chi4(1 + c.w * c.N2) == 1; }

int coset_character(EisCusp a, const Cusp& c, i64 C, i64 D) {
  if (a == EisCusp::kInfinity) {
    if (c.w == 1) return chi4(-C);
    if (c.w == 2) return C % 2 == 0 ? chi4(-C / 2) : 0;
    return chi4(D);
  }
  if (c.w == 1) return chi4(D);
  if (c.w == 2) return D % 2 == 0 ? chi4(D / 2) : 0;
  return chi4(C);
}

PhiScalars::PhiScalars(cplx s) : s_(s), inv_L2s_(1.0 / L_chi4(2.0 * s)) {}

void PhiScalars::load(i64 m) const {
  if (m < 1) throw Error(ErrorKind::kBadParam, "m must be positive");
  while (m % 2 == 0) m /= 2;
  if (m == odd_) return;
  const cplx w = 2.0 * s_ - 1.0;
  const i64 r = isqrt_exact(m);
  odd_ = m;
  if (r * r == m) {
    sigma_pos_ = sigma_twisted_square(w, r);
    sigma_neg_ = sigma_pos_ * pow_real(static_cast<double>(m), -w);
  } else {
    sigma_pos_ = sigma_twisted(w, m);
    sigma_neg_ = sigma_twisted(-w, m);
  }
}

cplx PhiScalars::s_value(i64 m) const {
  load(m);
  return sigma_neg_ * inv_L2s_;
}

cplx PhiScalars::t_value(i64 m) const {
  load(m);
  return cplx(0.0, 2.0) * sigma_pos_ * pow_real(static_cast<double>(m), 1.0 - 2.0 * s_) * inv_L2s_;
}

PhiValue phi_closed(EisCusp a, const Cusp& c, i64 m, cplx s) {
  return phi_closed(a, c, m, PhiScalars(s));
}

PhiValue phi_closed(EisCusp a, const Cusp& c, i64 m, const PhiScalars& s) {
  if (!valid_level(c.N)) throw Error(ErrorKind::kUnknownRow, "no table for this level");
  if (!is_singular(c)) throw Error(ErrorKind::kUnknownRow, "cusp " + c.label() + " is not singular");
  if (m <= 0) throw Error(ErrorKind::kBadParam, "m must be positive");
  return a == EisCusp::kInfinity ? phi_inf(c, m, s) : phi_zero(c, m, s);
}

SeriesValue phi_bruteforce_inf(const Cusp& c, i64 m, cplx s, i64 C_max, double tolerance) {
  if (!(s.real() > 1.0)) throw Error(ErrorKind::kOutOfDomain, "brute force needs Re s > 1");
  if (m <= 0 || C_max <= 0) throw Error(ErrorKind::kBadParam, "m and C_max must be positive");
  const i64 N = c.N;
  const i64 g = gcd(c.f, N / c.f);
  const double root = static_cast<double>(isqrt_exact(c.N2));
  SeriesValue out;
  for (i64 C = 1; C <= C_max; ++C) {
    const i64 Ca = c.f * C;
    if (gcd(Ca, N) != c.f) continue;
    const i64 r = mod(-c.u * mod_inverse(C, g), g);
    // Sieve the residues D = r + g k that share a prime with Ca.
    const i64 count = (Ca - r + g - 1) / g;
    std::vector<char> unit(static_cast<size_t>(count), 1);
    for (const auto& [p, e] : factorize(Ca)) {
      if (g % p == 0) {
        if (r % p == 0) std::fill(unit.begin(), unit.end(), 0);
        continue;
      }
      // First k with r + g k = 0 mod p.
      i64 k0 = mod(-r * mod_inverse(g, p), p);
      for (i64 k = k0; k < count; k += p) unit[static_cast<size_t>(k)] = 0;
    }
    cplx inner = 0.0;
    const cplx step = unit_root(m * g, Ca);
    cplx phase = 1.0;
    i64 k = 0;
    for (i64 D = r; D < Ca; D += g, ++k) {
      if (k % 64 == 0) {
        phase = unit_root(m * D, Ca);
      } else {
        phase *= step;
      }
      if (!unit[static_cast<size_t>(k)]) continue;
      const int chi = coset_character(EisCusp::kInfinity, c, Ca, D);
      if (chi != 0) inner += static_cast<double>(chi) * phase;
    }
    if (inner != 0.0) out.value += inner / pow_real(static_cast<double>(Ca) * root, 2.0 * s);
    out.terms_used = C;
  }
  double sigma = 0.0;
  for (i64 d : divisors(m)) sigma += static_cast<double>(d);
  const double e2 = 2.0 * s.real();
  out.tail_bound = sigma * std::ldexp(1.0, v2(c.f)) *
                   std::pow(root * static_cast<double>(c.f), -e2) *
                   std::pow(static_cast<double>(C_max), 1.0 - e2) / (e2 - 1.0);
  if (tolerance > 0.0 && out.tail_bound > tolerance) {
    throw ToleranceNotMet("phi brute force tail exceeds tolerance", out.value, out.tail_bound);
  }
  return out;
}

std::vector<CheckReport> phi_symmetry_check(int N, i64 m, cplx s, double tolerance) {
  std::vector<CheckReport> out;
  TruncationParams tp;
  for (const Cusp& c : enumerate_cusps(N)) {
    if (!is_singular(c)) continue;
    const i64 g = gcd(c.f, N / c.f);
    const Cusp dual = Cusp::Make(N, g == 1 ? 1 : mod(-c.u, g), N / c.f);
    const bool t_row = 2 * c.f >= N;
    const double sign = t_row ? 1.0 : static_cast<double>(chi4(-c.u));
    const cplx lhs = phi_closed(EisCusp::kInfinity, c, m, s).value;
    const cplx rhs = sign * phi_closed(EisCusp::kZero, dual, m, s).value;
    out.push_back(make_report("eisenstein.symmetry.N=" + std::to_string(N) + ".c=" + c.label() +
                                  ".m=" + std::to_string(m) + ".s=" + format_complex(s),
                              {{"N", std::to_string(N)},
                               {"c", c.label()},
                               {"dual", dual.label()},
                               {"m", std::to_string(m)},
                               {"s", format_complex(s)}},
                              lhs, rhs, tolerance, tp));
  }
  return out;
}

}  // namespace zagier
