#include "wilf/factorials.hpp"

#include "wilf/errors.hpp"

namespace wilf {

namespace {

unsigned long as_ulong(std::int64_t n) { return static_cast<unsigned long>(n); }

} // namespace

BigInt factorial(std::int64_t n)
{
    if (n < 0) throw DomainError("factorial of a negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), as_ulong(n));
    return r;
}

Rational double_factorial(std::int64_t m)
{
    if (m >= 0) {
        BigInt r;
        mpz_2fac_ui(r.get_mpz_t(), as_ulong(m));
        return Rational(r);
    }
    if (m % 2 == 0) throw DomainError("double factorial of a negative even integer");
    // m = -(2k+1)
    std::int64_t k = (-m - 1) / 2;
    BigInt den;
    if (k >= 1) mpz_2fac_ui(den.get_mpz_t(), as_ulong(2 * k - 1));
    else den = 1;
    return Rational(BigInt(k % 2 == 0 ? 1 : -1), den);
}

Rational falling_factorial(const Rational& x, std::int64_t n)
{
    if (n < 0) throw DomainError("falling factorial with negative length");
    Rational r(1);
    for (std::int64_t i = 0; i < n; ++i) r *= x - Rational(static_cast<long>(i));
    return r;
}

Rational rising_factorial(const Rational& x, std::int64_t n)
{
    if (n < 0) throw DomainError("rising factorial with negative length");
    Rational r(1);
    for (std::int64_t i = 0; i < n; ++i) r *= x + Rational(static_cast<long>(i));
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0) return 0;
    BigInt r;
    if (n >= 0) {
        if (k > n) return 0;
        mpz_bin_uiui(r.get_mpz_t(), as_ulong(n), as_ulong(k));
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), as_ulong(k - n - 1), as_ulong(k));
    return k % 2 == 0 ? r : BigInt(-r);
}

Rational rational_binomial(const Rational& x, std::int64_t l)
{
    if (l < 0) return Rational{};
    return falling_factorial(x, l) / Rational(factorial(l));
}

BigInt sigma(std::int64_t k)
{
    if (k < 0) throw DomainError("sigma of a negative index");
    static const int base[4] = {0, 1, -2, 2};
    BigInt r = base[k % 4];
    // (-4)^(k/4) = (-1)^(k/4) 2^(2(k/4))
    std::int64_t q = k / 4;
    r <<= static_cast<mp_bitcnt_t>(2 * q);
    if (q % 2 == 1) r = -r;
    return r;
}

Rational pow2(std::int64_t e)
{
    BigInt p = 1;
    std::int64_t a = e < 0 ? -e : e;
    p <<= static_cast<mp_bitcnt_t>(a);
    if (e < 0) return Rational(BigInt(1), p);
    return Rational(p);
}

} // namespace wilf
