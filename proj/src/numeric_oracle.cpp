#include "wilf/numeric_oracle.hpp"

#include "wilf/errors.hpp"
#include "wilf/factorials.hpp"
#include "wilf/sequences.hpp"

namespace wilf::numeric {

namespace {

// Internal sums carry this many bits beyond the requested precision.
constexpr mpfr_prec_t kGuardBits = 32;

mpfr_prec_t working_bits(int digits) { return digits_to_bits(digits) + kGuardBits; }

Rational half() { return Rational(BigInt(1), BigInt(2)); }

void check_wilf_domain(const Real& x)
{
    if (!(abs(x) < Real::ln2(x.precision()))) throw DomainError("argument outside (-ln 2, ln 2)");
}

Real sqrt_v(const Real& x)
{
    check_wilf_domain(x);
    return sqrt(ldexp(exp(-x), 1) - Real(1L, x.precision()));
}

// sum_{k=1}^{n} (-1)^k C(2n-k, n) sigma(k)/k
Rational central_sigma_sum(std::int64_t n)
{
    Rational s;
    for (std::int64_t k = 1; k <= n; ++k) {
        Rational t(binomial(2 * n - k, n) * sigma(k), BigInt(k));
        s += k % 2 == 0 ? t : -t;
    }
    return s;
}

} // namespace

Real to_real(const PiLinear& x, mpfr_prec_t bits)
{
    return Real(x.rat, bits) + Real(x.pi, bits) * Real::pi(bits);
}

Real eval_wilf(const Real& x)
{
    Real s = sqrt_v(x);
    return atan(s) / s;
}

Real eval_b_generating(const Real& x) { return Real(1L, x.precision()) / ldexp(sqrt_v(x), 2); }

Real eval_c_generating(const Real& x)
{
    Real s = sqrt_v(x);
    return (ldexp(Real::pi(x.precision()), -2) - atan(s)) / s;
}

Real hyp2f1_at_minus1(std::int64_t n, int digits)
{
    if (n < 0) throw DomainError("hyp2f1_at_minus1 needs n >= 0");
    const mpfr_prec_t bits = working_bits(digits);
    const Rational a = Rational(n) + half(), b = half(), c = Rational(n + 1) + half();
    Real term(1L, bits), sum(1L, bits);
    for (std::int64_t j = 0;; ++j) {
        Rational ratio = (a + Rational(j)) * (b + Rational(j)) / ((c + Rational(j)) * Rational(j + 1)) * half();
        term *= Real(ratio, bits);
        sum += term;
        if (term <= ldexp(sum, -static_cast<long>(bits) - 8)) break;
    }
    // 2^-(n+1/2)
    return ldexp(sum, -static_cast<long>(n)) / sqrt(Real(2L, bits));
}

const std::vector<std::string>& pi_series_ids()
{
    static const std::vector<std::string> ids{"limit-T", "sqrt3-12", "sqrt3-4", "pi-2F1"};
    return ids;
}

Real pi_series(std::string_view id, std::int64_t terms, int digits)
{
    if (terms < 0) throw UsageError("pi_series: negative term count");
    const mpfr_prec_t bits = working_bits(digits);
    if (id == "limit-T") return Real(Rational(-4) * seq::t_seq(terms), bits);
    if (id == "sqrt3-12") {
        Real s3 = sqrt(Real(3L, bits));
        Real q = s3 - Real(1L, bits), qn(1L, bits), sum(bits);
        for (std::int64_t n = 1; n <= terms; ++n) {
            qn *= q;
            Rational t = n % 2 == 0 ? seq::t_seq(n) : -seq::t_seq(n);
            sum += Real(t, bits) * qn;
        }
        return Real(12L, bits) * s3 * sum;
    }
    if (id == "sqrt3-4") {
        Rational sum;
        for (std::int64_t n = 0; n <= terms; ++n) sum -= central_sigma_sum(n) / pow(Rational(6), n);
        return Real(4L, bits) * sqrt(Real(3L, bits)) * Real(sum, bits);
    }
    if (id == "pi-2F1") {
        const std::int64_t n = terms;
        Real F = hyp2f1_at_minus1(n, digits);
        Rational w = double_factorial(2 * n) / double_factorial(2 * n + 1);
        BigInt nf = factorial(n);
        Rational r = Rational(BigInt(nf * nf), factorial(2 * n)) * central_sigma_sum(n);
        return Real(4L, bits) * (Real(w, bits) * F - Real(r, bits));
    }
    throw UsageError("unknown pi representation '" + std::string(id) + "'");
}

Real pi_gap(std::int64_t n, int digits)
{
    const Rational r = seq::pi_approx(n);
    mpfr_prec_t bits = working_bits(digits);
    for (;;) {
        Real gap = abs(Real::pi(bits) - Real(r, bits));
        // keep `digits` significant digits: the cancellation must leave
        // at least digits_to_bits(digits) bits of the working precision
        long lost = gap.is_zero() ? static_cast<long>(bits) : -static_cast<long>(mpfr_get_exp(gap.get())) + 2;
        if (!gap.is_zero() && static_cast<long>(bits) - lost >= static_cast<long>(working_bits(digits))) return gap;
        if (bits > (mpfr_prec_t{1} << 22)) throw DomainError("pi_gap: precision limit reached");
        bits *= 2;
    }
}

SeriesRepresentation series_representation_check(char seq, std::int64_t n, std::int64_t terms, int digits)
{
    if (seq != 'b' && seq != 'd' && seq != 'e') throw UsageError(std::string("no series representation for '") + seq + "'");
    if (n < 0) throw DomainError("series_representation_check: negative index");
    if (seq == 'd' && n < 1) throw DomainError("the d representation starts at n = 1");
    if (terms < 1) throw UsageError("series_representation_check needs at least one term");

    const mpfr_prec_t bits = working_bits(digits);
    const Real pi = Real::pi(bits);
    const Rational h = half();

    // polynomial weight of term j, excluding w_j
    auto weight = [&](std::int64_t j) -> Real {
        Rational jp = Rational(j) + h, jm = Rational(j) - h;
        switch (seq) {
        case 'b': return Real(pow(jp, n - 1), bits);
        case 'd': return Real(pow(jm, n - 1) / jp, bits);
        default: return Real(pow(jp, n - 1) / jm, bits);
        }
    };

    Real scale = Real(1L, bits) / (pi * Real(factorial(n), bits));
    Rational exact;
    switch (seq) {
    case 'b':
        scale /= Real(4L, bits);
        exact = seq::b_seq(n);
        break;
    case 'd': exact = seq::d_seq(n); break;
    default:
        scale = -scale;
        exact = seq::e_seq(n);
    }

    // w_0 = sqrt2 * Gamma(3/2)^2 / Gamma(2) = sqrt2 pi/4; w_{j+1}/w_j = (j+3/2)/(2j+2)
    Real w = sqrt(Real(2L, bits)) * ldexp(pi, -2);
    Real sum(bits);
    for (std::int64_t j = 0; j < terms; ++j) {
        sum += weight(j) * w;
        w *= Real((Rational(j) + Rational(3) * h) / Rational(2 * j + 2), bits);
    }
    // w now holds w_terms; bound the tail from j = J = terms >= 1 on
    const std::int64_t J = terms;
    Rational rho = (Rational(J) + Rational(3) * h) / Rational(2 * J + 2);
    if (n >= 2) {
        Rational a = seq == 'd' ? (Rational(J) + h) / (Rational(J) - h) : (Rational(J) + Rational(3) * h) / (Rational(J) + h);
        rho *= pow(a, n - 1);
    }
    Real tail(bits);
    if (rho < Rational(1)) tail = abs(weight(J) * w * scale) / Real(Rational(1) - rho, bits);
    else mpfr_set_inf(tail.get(), 1);

    Real ex(exact, bits);
    Real rounding = ldexp(abs(ex) + Real(1L, bits), -static_cast<long>(digits_to_bits(digits)));
    return {sum * scale, ex, tail, rounding};
}

Real asymptotic_trend(char seq, std::int64_t n, int digits)
{
    if (n < 1) throw DomainError("asymptotic_trend needs n >= 1");
    const mpfr_prec_t bits = working_bits(digits);
    const Real one(1L, bits), ln2 = Real::ln2(bits);
    const Real log_base = log(Real(n, bits)) - one - log(ln2); // log(n/(e ln2))
    Rational exact;
    Real log_asym(bits);
    if (seq == 'b') {
        exact = Rational(4) * Rational(factorial(n)) * seq::b_seq(n);
        log_asym = ldexp(log(Real(2L, bits) / ln2), -1) + Real(n, bits) * log_base;
    } else if (seq == 'c') {
        exact = Rational(2) * Rational(factorial(n + 1)) * seq::c_seq(n + 1);
        log_asym = one + log(Real::pi(bits)) - ldexp(log(ldexp(ln2, 1)), -1) + Real(n + 1, bits) * log_base;
    } else {
        throw UsageError(std::string("no asymptotic formula for '") + seq + "'");
    }
    if (exact.sign() <= 0) throw DomainError("asymptotic_trend: value is not positive");
    return exp(log(Real(exact, bits)) - log_asym);
}

Real eval_polynomial(std::span<const PiLinear> coeffs, const Real& x)
{
    Real acc(x.precision());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + to_real(coeffs[i], x.precision());
    return acc;
}

Real eval_polynomial(std::span<const Rational> coeffs, const Real& x)
{
    Real acc(x.precision());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Real(coeffs[i], x.precision());
    return acc;
}

Real geometric_tail(const Real& K, const Real& r, std::int64_t N)
{
    Real one(1L, r.precision());
    if (!(r < one)) throw DomainError("geometric_tail needs ratio < 1");
    return K * pow(r, static_cast<long>(N + 1)) / (one - r);
}

} // namespace wilf::numeric
