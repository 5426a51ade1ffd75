#include "wilf/sequences.hpp"

#include <string>
#include <vector>

#include "wilf/determinant.hpp"
#include "wilf/errors.hpp"
#include "wilf/factorials.hpp"
#include "wilf/sequence_table.hpp"

namespace wilf::seq {

namespace {

using Table = SequenceTable<std::int64_t, Rational>;

enum class Memo { T, b, c, d, e, c_inner };

Table& table(Memo m)
{
    static Table t_tab("T"), b_tab("b"), c_tab("c"), d_tab("d"), e_tab("e"), inner_tab("c-inner");
    switch (m) {
    case Memo::T: return t_tab;
    case Memo::b: return b_tab;
    case Memo::c: return c_tab;
    case Memo::d: return d_tab;
    case Memo::e: return e_tab;
    case Memo::c_inner: break;
    }
    return inner_tab;
}

void require_nonneg(std::int64_t n, const char* what)
{
    if (n < 0) throw DomainError(std::string(what) + ": negative index");
}

Rational sign_pow(std::int64_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational fact(std::int64_t n) { return Rational(factorial(n)); }

// sum_{k=1}^{n} (-1)^k C(2n-k, n) sigma(k)/k
Rational central_sigma_sum(std::int64_t n)
{
    Rational s;
    for (std::int64_t k = 1; k <= n; ++k)
        s += sign_pow(k) * Rational(binomial(2 * n - k, n) * sigma(k), BigInt(k));
    return s;
}

// k!/2^k sum_{l=1}^{k} (-1)^l C(2k-l, k) sigma(l)/l
Rational c_inner(std::int64_t k)
{
    return table(Memo::c_inner).get(k, [k] { return fact(k) * pow2(-k) * central_sigma_sum(k); });
}

// sum_k (-1)^k S(n,k) (2k+shift)!!
Rational signed_stirling_dfact_sum(std::int64_t n, std::int64_t shift, std::int64_t k_min)
{
    Rational s;
    for (std::int64_t k = k_min; k <= n; ++k)
        s += sign_pow(k) * Rational(comb::stirling2(n, k)) * double_factorial(2 * k + shift);
    return s;
}

std::vector<Rational> prefix(Rational (*f)(std::int64_t), std::int64_t n)
{
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) v.push_back(f(k));
    return v;
}

} // namespace

Rational t_seq(std::int64_t n)
{
    require_nonneg(n, "T");
    return table(Memo::T).get(n, [n] {
        if (n == 0) return Rational{};
        return t_seq(n - 1) + sign_pow(n) * Rational(sigma(n)) * pow2(-n) / Rational(n);
    });
}

PiLinear arctan_over_z_at1(std::int64_t n)
{
    require_nonneg(n, "arctan_over_z_at1");
    Rational s = sign_pow(n);
    return {s * t_seq(n), s * Rational(BigInt(1), BigInt(4))};
}

PiLinear arctan_sqrt_at1(std::int64_t n)
{
    require_nonneg(n, "arctan_sqrt_at1");
    const Rational quarter(BigInt(1), BigInt(4));
    PiLinear bracket(fact(n) * pow2(-n) * central_sigma_sum(n), double_factorial(2 * n - 1) * quarter);
    return bracket * (sign_pow(n) * pow2(-n) / fact(n));
}

PiLinear arctan_sqrt_at1_kernel(std::int64_t n)
{
    require_nonneg(n, "arctan_sqrt_at1_kernel");
    const Rational quarter(BigInt(1), BigInt(4));
    PiLinear sum;
    for (std::int64_t k = 0; k <= n; ++k) sum += PiLinear(t_seq(k), quarter) * comb::p_kernel(n, k);
    return sum * (sign_pow(n) / double_factorial(2 * n));
}

Rational d_seq(std::int64_t n)
{
    require_nonneg(n, "d");
    return table(Memo::d).get(n, [n] { return sign_pow(n) * signed_stirling_dfact_sum(n, -3, 0) / fact(n); });
}

Rational sqrt_series_coeff(std::int64_t n) { return -d_seq(n); }

Rational e_seq(std::int64_t n)
{
    require_nonneg(n, "e");
    return table(Memo::e).get(n, [n] {
        Rational outer;
        for (std::int64_t k = 0; k <= n; ++k) {
            Rational inner;
            for (std::int64_t l = 0; l <= k; ++l)
                inner += Rational(comb::stirling2(k, l)) * double_factorial(2 * l - 3) * pow2(-l);
            outer += Rational(binomial(n, k)) * pow2(k) * inner;
        }
        return -outer / double_factorial(2 * n);
    });
}

Rational b_seq(std::int64_t n)
{
    require_nonneg(n, "b");
    return table(Memo::b).get(n, [n] {
        return sign_pow(n) * signed_stirling_dfact_sum(n, -1, 0) / (Rational(4) * fact(n));
    });
}

Rational c_seq(std::int64_t n)
{
    require_nonneg(n, "c");
    return table(Memo::c).get(n, [n] {
        Rational s;
        for (std::int64_t k = 1; k <= n; ++k) s += sign_pow(k) * Rational(comb::stirling2(n, k)) * c_inner(k);
        return sign_pow(n + 1) * s / fact(n);
    });
}

WilfCoefficient a_coeff(std::int64_t n)
{
    WilfCoefficient w;
    w.n = n;
    w.b = b_seq(n);
    w.c = c_seq(n);
    w.value = PiLinear(-w.c, w.b);
    return w;
}

PiLinear gauss_2f1_special(std::int64_t n)
{
    require_nonneg(n, "gauss_2f1_special");
    const Rational quarter(BigInt(1), BigInt(4));
    Rational pi_part = double_factorial(2 * n + 1) / double_factorial(2 * n) * quarter;
    Rational rat_part = Rational(2 * n + 1) * pow2(-2 * n) * central_sigma_sum(n);
    return {rat_part, pi_part};
}

PiLinear wilf_coeff_via_2f1(std::int64_t n)
{
    require_nonneg(n, "wilf_coeff_via_2f1");
    PiLinear sum;
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational w = sign_pow(k) * Rational(comb::stirling2(n, k)) * double_factorial(2 * k) / Rational(2 * k + 1);
        sum += gauss_2f1_special(k) * w;
    }
    return sum * (sign_pow(n) / fact(n));
}

Rational bell_sqrt_argument(std::int64_t i)
{
    if (i < 1) throw DomainError("bell_sqrt_argument: index starts at 1");
    return -fact(i) * sqrt_series_coeff(i);
}

Rational bell_sqrt_special(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) throw DomainError("bell_sqrt_special needs n >= k >= 0");
    Rational s;
    for (std::int64_t l = k; l <= n; ++l) s += sign_pow(l) * Rational(comb::stirling2(n, l)) * comb::p_kernel(l, k);
    return sign_pow(n) * s / fact(k);
}

Rational b_via_determinant(std::int64_t n)
{
    if (n < 1) throw DomainError("b_via_determinant needs n >= 1");
    auto alphas = prefix(sqrt_series_coeff, n);
    return series::wronski_reciprocal(alphas, static_cast<std::size_t>(n)) / Rational(4);
}

Rational d_via_determinant(std::int64_t n)
{
    if (n < 1) throw DomainError("d_via_determinant needs n >= 1");
    auto alphas = prefix(b_seq, n);
    return -series::wronski_reciprocal(alphas, static_cast<std::size_t>(n)) / Rational(4);
}

std::pair<Rational, Rational> d_e_determinants(std::int64_t n)
{
    if (n < 1) throw DomainError("d_e_determinants needs n >= 1");
    auto es = prefix(e_seq, n);
    std::vector<Rational> ds;
    for (std::int64_t k = 0; k <= n; ++k) ds.push_back(Rational(k + 1) * d_seq(k + 1));
    Rational d_next = series::wronski_reciprocal(es, static_cast<std::size_t>(n)) / Rational(n + 1);
    Rational e_n = series::wronski_reciprocal(ds, static_cast<std::size_t>(n));
    return {d_next, e_n};
}

Rational pi_approx(std::int64_t n) { return c_seq(n) / b_seq(n); }

BigInt log_convex_companion(std::int64_t n)
{
    if (n < 1) throw DomainError("log_convex_companion needs n >= 1");
    Rational s = sign_pow(n) * signed_stirling_dfact_sum(n, -2, 1);
    return s.numerator(); // integer: every (2k-2)!! with k >= 1 is
}

Rational b_recursion_rhs(std::int64_t n)
{
    require_nonneg(n, "b_recursion_rhs");
    Rational s(BigInt(1), BigInt(4));
    for (std::int64_t j = 1; j <= n; ++j) s += Rational(BigInt(binomial(n + 1, j) - 1)) * fact(j) * b_seq(j);
    return s;
}

comb::IdentityPair kernel_sum_identity(std::int64_t n)
{
    require_nonneg(n, "kernel_sum_identity");
    comb::IdentityPair r;
    for (std::int64_t l = 0; l <= n; ++l) {
        BigInt c = binomial(l, n - l);
        if (c == 0) continue;
        Rational inner;
        for (std::int64_t k = 0; k <= l; ++k) inner += comb::p_kernel(l, k);
        r.lhs += Rational(c) * pow(Rational(-2), static_cast<long>(l)) / fact(l) * inner;
    }
    r.rhs = pow(Rational(-2), static_cast<long>(n));
    return r;
}

comb::IdentityPair kernel_t_identity(std::int64_t n)
{
    require_nonneg(n, "kernel_t_identity");
    comb::IdentityPair r;
    for (std::int64_t l = 0; l <= n; ++l) {
        BigInt c = binomial(l, n - l);
        if (c == 0) continue;
        Rational inner;
        for (std::int64_t k = 0; k <= l; ++k) inner += comb::p_kernel(l, k) * t_seq(k);
        r.lhs += Rational(c) * pow(Rational(-2), static_cast<long>(l)) / fact(l) * inner;
    }
    r.rhs = pow(Rational(-2), static_cast<long>(n)) * t_seq(n);
    return r;
}

comb::IdentityPair kernel_t_closed_identity(std::int64_t n)
{
    require_nonneg(n, "kernel_t_closed_identity");
    comb::IdentityPair r;
    for (std::int64_t l = 0; l <= n; ++l) r.lhs += comb::p_kernel(n, l) * t_seq(l);
    r.rhs = fact(n) * pow2(-n) * central_sigma_sum(n);
    return r;
}

} // namespace wilf::seq
