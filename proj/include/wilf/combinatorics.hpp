#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "wilf/rational.hpp"

namespace wilf::comb {

// Triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1), rows memoized.
BigInt stirling2(std::int64_t n, std::int64_t k);
// Explicit alternating sum (1/k!) sum_j (-1)^(k-j) C(k,j) j^n with 0^0 = 1.
BigInt stirling2_explicit(std::int64_t n, std::int64_t k);
// Signed first kind: <z>_n = sum_l s(n,l) z^l.
BigInt stirling1_signed(std::int64_t n, std::int64_t k);

// One index set of the Bell partition sum: counts[i-1] = l_i, the number
// of blocks of size i, with sum i l_i = n and sum l_i = k.
struct PartitionMultiSet {
    std::vector<std::pair<std::int64_t, std::int64_t>> multiplicities; // (part i, count l_i), count > 0 only
};

void enumerate_partitions(std::int64_t n, std::int64_t k, const std::function<void(const PartitionMultiSet&)>& visit);

// B(n,k)(x_1..x_{n-k+1}); xs[0] is x_1. Wrong length -> UsageError, n < k -> DomainError.
Rational bell_partial_bruteforce(std::int64_t n, std::int64_t k, std::span<const Rational> xs);
// n!/k! [t^n] (sum_m x_m t^m/m!)^k via truncated series arithmetic.
Rational bell_partial_via_series(std::int64_t n, std::int64_t k, std::span<const Rational> xs);

// B(n,k)(<1/2>_1, ..., <1/2>_{n-k+1}).
Rational bell_half_closed(std::int64_t n, std::int64_t k);
// B(n,k)(alpha, 1, 0, ..., 0).
Rational bell_x_alpha_one_closed(std::int64_t n, std::int64_t k, const Rational& alpha);
// B(n,k)(<alpha>_1, ..., <alpha>_{n-k+1}) as an alternating falling-factorial sum.
Rational bell_falling_closed(std::int64_t n, std::int64_t k, const Rational& alpha);

// P(n,k) = k! (2(n-k)-1)!! C(2n-k-1, 2(n-k)); n < k -> DomainError.
Rational p_kernel(std::int64_t n, std::int64_t k);

struct IdentityPair {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

// sum_{k=l}^{n} C(2n-k-1, n-1) 2^k k  vs  C(2n-l, n) 2^l n. Empty sum when l > n.
IdentityPair verify_lemma1(std::int64_t l, std::int64_t n);
// sum_m (-1)^m C(k,m) C(m/2, l)  vs  0 (k > l) or (-1)^l P(l,k)/(2l)!!.
IdentityPair verify_lemma2(std::int64_t k, std::int64_t l);
// sum_{l<=k} (-2)^l C(l, k-l)  vs  sigma(k+1).
IdentityPair verify_cos_sin_identity(std::int64_t k);

struct InversionCheck {
    bool forward_holds = false; // s_m = sum_k C(k, m-k) S_k for every m <= n
    IdentityPair inverse;       // (-1)^n n S_n  vs  sum_k C(2n-k-1, n-1) (-1)^k k s_k
    bool holds() const { return forward_holds && inverse.holds(); }
};

// s[i] and S[i] hold s_{i+1} and S_{i+1}; both need at least n entries.
InversionCheck verify_inversion_pair(std::span<const Rational> s, std::span<const Rational> S, std::int64_t n);

// sum_m s(n,m) (1/2)^m S(m,k)  vs  (-1)^(n+k) (2(n-k)-1)!!/2^n C(2n-k-1, 2(n-k)).
IdentityPair verify_stirling_product_identity(std::int64_t n, std::int64_t k);

} // namespace wilf::comb
