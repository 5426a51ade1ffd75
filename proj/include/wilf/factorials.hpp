#pragma once

#include <cstdint>

#include "wilf/rational.hpp"

namespace wilf {

BigInt factorial(std::int64_t n); // n < 0 -> DomainError

// m!! for m >= -1, extended to negative odd m by
// (-(2k+1))!! = (-1)^k / (2k-1)!!. Negative even m -> DomainError.
Rational double_factorial(std::int64_t m);

Rational falling_factorial(const Rational& x, std::int64_t n); // <x>_n
Rational rising_factorial(const Rational& x, std::int64_t n);  // (x)_n

// C(n, k) for integer n and k. k < 0 gives 0; n < 0 uses the extended
// rule C(n, k) = (-1)^k C(k-n-1, k), so C(-1, 0) = 1.
BigInt binomial(std::int64_t n, std::int64_t k);

// C(x, l) = <x>_l / l! for rational upper argument.
Rational rational_binomial(const Rational& x, std::int64_t l);

// sigma(k) = 2^(k/2) sin(3k pi/4): (0, 1, -2, 2) then sigma(k+4) = -4 sigma(k).
BigInt sigma(std::int64_t k);

// 2^e as an exact rational, e of either sign.
Rational pow2(std::int64_t e);

} // namespace wilf
