#pragma once

#include <cstdint>
#include <utility>

#include "wilf/combinatorics.hpp"
#include "wilf/pi_linear.hpp"
#include "wilf/rational.hpp"

namespace wilf::seq {

// a_n = b_n pi - c_n; value is derived from (b, c).
struct WilfCoefficient {
    std::int64_t n = 0;
    PiLinear value;
    Rational b;
    Rational c;
};

Rational t_seq(std::int64_t n);

// Coefficient of (z-1)^n in arctan(z)/z.
PiLinear arctan_over_z_at1(std::int64_t n);
// Coefficient of (z-1)^n in arctan(sqrt z)/sqrt z, sigma-sum form.
PiLinear arctan_sqrt_at1(std::int64_t n);
// Same coefficient through the kernel: (-1)^n/(2n)!! sum_k P(n,k)(pi/4 + T(k)).
PiLinear arctan_sqrt_at1_kernel(std::int64_t n);

Rational sqrt_series_coeff(std::int64_t n); // [z^n] sqrt(2e^-z - 1) = -d_n
Rational d_seq(std::int64_t n);
Rational e_seq(std::int64_t n);
Rational b_seq(std::int64_t n);
Rational c_seq(std::int64_t n);
WilfCoefficient a_coeff(std::int64_t n);

// 2F1(n+1/2, n+1; n+3/2; -1) in Q + Q*pi.
PiLinear gauss_2f1_special(std::int64_t n);
// a_n through the hypergeometric form:
// (-1)^n/n! sum_k (-1)^k S(n,k) (2k)!!/(2k+1) 2F1(k+1/2, k+1; k+3/2; -1).
PiLinear wilf_coeff_via_2f1(std::int64_t n);

// x_i = i! d_i for i >= 1, i.e. 1, 0, 1, 3, 16, 105, ...
Rational bell_sqrt_argument(std::int64_t i);
// B(n,k)(x_1, x_2, ...) with the arguments above, closed form.
Rational bell_sqrt_special(std::int64_t n, std::int64_t k);

// Determinant routes via Wronski's formula for reciprocal series (n >= 1).
Rational b_via_determinant(std::int64_t n);
Rational d_via_determinant(std::int64_t n);
// (d_{n+1}, e_n): first from the e-coefficients, second from (k+1) d_{k+1}.
std::pair<Rational, Rational> d_e_determinants(std::int64_t n);

Rational pi_approx(std::int64_t n); // c_n / b_n

// v_n = (-1)^n sum_{k>=1} (-1)^k S(n,k) (2k-2)!!, n >= 1.
BigInt log_convex_companion(std::int64_t n);

// 1/4 + sum_{j=1}^{n} [C(n+1,j) - 1] j! b_j; should equal (n+1)! b_{n+1}.
Rational b_recursion_rhs(std::int64_t n);

// sum_l C(l, n-l) (-2)^l/l! sum_k P(l,k)  vs  (-2)^n.
comb::IdentityPair kernel_sum_identity(std::int64_t n);
// same with T(k) weights  vs  (-2)^n T(n).
comb::IdentityPair kernel_t_identity(std::int64_t n);
// sum_l P(n,l) T(l)  vs  n!/2^n sum_k (-1)^k C(2n-k, n) sigma(k)/k.
comb::IdentityPair kernel_t_closed_identity(std::int64_t n);

} // namespace wilf::seq
