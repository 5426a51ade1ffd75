#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wilf/pi_linear.hpp"
#include "wilf/real.hpp"

namespace wilf::numeric {

Real to_real(const PiLinear& x, mpfr_prec_t bits);

// Direct evaluation on the real segment |x| < ln 2 (DomainError outside).
Real eval_wilf(const Real& x);                // arctan(sqrt v)/sqrt v, v = 2e^-x - 1
Real eval_b_generating(const Real& x);        // 1/(4 sqrt v)
Real eval_c_generating(const Real& x);        // (pi/4 - arctan sqrt v)/sqrt v

// 2F1(n+1/2, n+1; n+3/2; -1) via Pfaff: 2^-(n+1/2) 2F1(n+1/2, 1/2; n+3/2; 1/2).
// The transformed series has term ratio below 1/2, so the first omitted term
// bounds the tail; summation stops once it falls under 2^-(bits+8) of the sum.
Real hyp2f1_at_minus1(std::int64_t n, int digits);

// Partial sums of four representations of pi. `terms` is the last index
// included (for pi-2F1 it is the parameter n of the identity).
//   limit-T   -4 T(N)
//   sqrt3-12  12 sqrt3 sum_{1<=n<=N} (-1)^n T(n) (sqrt3-1)^n
//   sqrt3-4   4 sqrt3 sum_{n<=N} 6^-n sum_k (-1)^(k+1) C(2n-k,n) sigma(k)/k
//   pi-2F1    4[(2n)!!/(2n+1)!! F_n - (n!)^2/(2n)! sum_k (-1)^k C(2n-k,n) sigma(k)/k]
Real pi_series(std::string_view id, std::int64_t terms, int digits);
const std::vector<std::string>& pi_series_ids();

// |pi - c_n/b_n|. The gap shrinks roughly like (ln2/6.3)^n, far below any
// fixed precision, so the working precision doubles until the difference
// keeps at least `digits` significant digits.
Real pi_gap(std::int64_t n, int digits);

struct SeriesRepresentation {
    Real partial_sum;  // already scaled, comparable to `exact`
    Real exact;        // the exact sequence value
    Real tail_bound;   // bound on the omitted terms after scaling
    Real rounding;     // allowance for the working precision
    bool within() const { return abs(partial_sum - exact) <= tail_bound + rounding; }
};

// seq in {'b','d','e'}: the infinite-series representation summed over
// j = 0..terms-1 with weights w_j = 2^(j+1/2)/C(2j+1, j+1/2).
// The d form is the index-corrected one: d_n = 1/(pi n!) sum (j-1/2)^(n-1)/(j+1/2) w_j, n >= 1.
SeriesRepresentation series_representation_check(char seq, std::int64_t n, std::int64_t terms, int digits);

// Ratio of the exact value to its leading asymptotic, computed in log space.
//   'b': 4 n! b_n / (sqrt(2/ln2) (n/(e ln2))^n)
//   'c': 2 (n+1)! c_{n+1} / (e pi/sqrt(2 ln2) (n/(e ln2))^(n+1))
Real asymptotic_trend(char seq, std::int64_t n, int digits);

// sum_{n<=N} coeffs[n] x^n.
Real eval_polynomial(std::span<const PiLinear> coeffs, const Real& x);
Real eval_polynomial(std::span<const Rational> coeffs, const Real& x);

// K r^(N+1)/(1-r): geometric bound on sum_{n>N} |u_n| when |u_n| <= K r^n.
Real geometric_tail(const Real& K, const Real& r, std::int64_t N);

} // namespace wilf::numeric
