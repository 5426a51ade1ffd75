#include "wilf/real.hpp"

#include <algorithm>
#include <cmath>

#include "wilf/errors.hpp"

namespace wilf::numeric {

mpfr_prec_t digits_to_bits(int digits)
{
    if (digits < 1) throw UsageError("precision must be at least one digit");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

Real::Real(mpfr_prec_t bits)
{
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(const Rational& q, mpfr_prec_t bits) : Real(bits) { mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN); }

Real::Real(const BigInt& z, mpfr_prec_t bits) : Real(bits) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

Real Real::parse(const std::string& decimal, mpfr_prec_t bits)
{
    Real r(bits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) throw UsageError("not a decimal number: '" + decimal + "'");
    return r;
}

Real Real::pi(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::ln2(mpfr_prec_t bits)
{
    Real r(bits);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    // steal by swapping with a minimal placeholder
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_decimal(int digits) const
{
    if (digits < 1) throw UsageError("need at least one digit");
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (m.front() == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // value = 0.m * 10^e10
    const long point = static_cast<long>(e10);
    std::string out;
    if (point > 0 && point <= digits) {
        out = m.substr(0, static_cast<std::size_t>(point));
        if (static_cast<std::size_t>(point) < m.size()) out += "." + m.substr(static_cast<std::size_t>(point));
    } else if (point <= 0 && point > -5) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + m;
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        long e = point - 1;
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return sign + out;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

namespace {

// Grow the destination precision to the wider operand before operating.
void widen(Real& a, const Real& b)
{
    if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

} // namespace

Real& Real::operator+=(const Real& o)
{
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o)
{
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o)
{
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }

Real abs(const Real& x)
{
    Real r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x)
{
    if (mpfr_sgn(x.get()) < 0) throw DomainError("square root of a negative number");
    Real r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x)
{
    Real r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real log(const Real& x)
{
    if (mpfr_sgn(x.get()) <= 0) throw DomainError("logarithm of a nonpositive number");
    Real r(x.precision());
    mpfr_log(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real atan(const Real& x)
{
    Real r(x.precision());
    mpfr_atan(r.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long e)
{
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e)
{
    Real r(x);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

} // namespace wilf::numeric
