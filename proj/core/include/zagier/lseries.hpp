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


#ifndef ZAGIER_LSERIES_HPP_
#define ZAGIER_LSERIES_HPP_

#include <cstdint>

#include "zagier/arith.hpp"
#include "zagier/specfun.hpp"

namespace zagier {

// A truncated series with a bound on what was dropped. `heuristic` marks a
// bound calibrated on observed coefficient growth rather than proven.
struct SeriesValue {
  cplx value{};
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool heuristic = false;
};

// zeta(2s)/zeta(s) * sum_{q <= q_max} b_q(D) q^{-s}, Re s > 1 (Re s > 3/2
// when D = 0). The tail bound assumes b_q(D) << q^theta with theta = 1/2
// for D = 0 and 1/10 otherwise, scaled by the largest b_q(D)/q^theta seen.
SeriesValue zagier_L(std::int64_t D, cplx s, std::int64_t q_max);

// The same function from its Euler product: b_q(D) is multiplicative in q,
// the primes not dividing 2D contribute a Dirichlet L-series of the symbol
// (D/.), evaluated exactly through Hurwitz zeta values, and the finitely
// many remaining primes contribute local factors summed to convergence.
cplx zagier_L_euler(std::int64_t D, cplx s);

// Z(z, s) = sum_n sigma_s(chi_4; n^2) n^{-z}, closed form and truncation.
cplx Z_closed(cplx z, cplx s);
SeriesValue Z_truncated(cplx z, cplx s, std::int64_t n_max);

// s(m) = sigma_{1-2s}(chi_4; m) / L(chi_4, 2s) and
// t(m) = 2i sigma_{2s-1}(chi_4; m) m^{1-2s} / L(chi_4, 2s).
cplx s_scalar(std::int64_t m, cplx s);
cplx t_scalar(std::int64_t m, cplx s);

}  // namespace zagier

#endif  // ZAGIER_LSERIES_HPP_
