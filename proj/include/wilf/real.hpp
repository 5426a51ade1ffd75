#pragma once

#include <string>

#include <mpfr.h>

#include "wilf/rational.hpp"

namespace wilf::numeric {

// Decimal digits -> binary precision, with a fixed guard margin.
mpfr_prec_t digits_to_bits(int digits);

// MPFR value that owns its precision. Binary operations round to the larger
// operand precision; nothing reads a global default.
class Real {
public:
    explicit Real(mpfr_prec_t bits);
    Real(long v, mpfr_prec_t bits);
    Real(const Rational& q, mpfr_prec_t bits);
    Real(const BigInt& z, mpfr_prec_t bits);
    static Real parse(const std::string& decimal, mpfr_prec_t bits);
    static Real pi(mpfr_prec_t bits);
    static Real ln2(mpfr_prec_t bits);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // `digits` significant digits, round-half-even. Fixed notation for
    // moderate exponents, otherwise d.ddd...e+-XX.
    std::string to_decimal(int digits) const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

private:
    mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real atan(const Real& x);
Real pow(const Real& x, long e);
Real ldexp(const Real& x, long e); // x * 2^e
Real max(const Real& a, const Real& b);

} // namespace wilf::numeric
