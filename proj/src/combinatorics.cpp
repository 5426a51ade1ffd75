#include "wilf/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "wilf/errors.hpp"
#include "wilf/factorials.hpp"
#include "wilf/formal_series.hpp"

namespace wilf::comb {

namespace {

// Append-only triangle of rows 0..n, grown on demand under a writer lock.
class Triangle {
public:
    using Step = void (*)(const std::vector<BigInt>& prev, std::int64_t n, std::vector<BigInt>& row);

    explicit Triangle(Step step) : step_(step) { rows_.push_back({BigInt(1)}); }

    BigInt at(std::int64_t n, std::int64_t k)
    {
        if (n < 0) throw DomainError("Stirling number with negative n");
        if (k < 0 || k > n) return 0;
        {
            std::shared_lock lock(mu_);
            if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            std::vector<BigInt> row(rows_.size() + 1);
            step_(rows_.back(), static_cast<std::int64_t>(rows_.size()), row);
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    Step step_;
    std::shared_mutex mu_;
    std::vector<std::vector<BigInt>> rows_;
};

// row n from row n-1; entries beyond the previous row are 0
BigInt prev_at(const std::vector<BigInt>& prev, std::int64_t k)
{
    if (k < 0 || static_cast<std::size_t>(k) >= prev.size()) return 0;
    return prev[k];
}

void stirling2_step(const std::vector<BigInt>& prev, std::int64_t n, std::vector<BigInt>& row)
{
    for (std::int64_t k = 0; k <= n; ++k) row[k] = BigInt(k) * prev_at(prev, k) + prev_at(prev, k - 1);
}

void stirling1_step(const std::vector<BigInt>& prev, std::int64_t n, std::vector<BigInt>& row)
{
    // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
    for (std::int64_t k = 0; k <= n; ++k) row[k] = prev_at(prev, k - 1) - BigInt(n - 1) * prev_at(prev, k);
}

Triangle& stirling2_table()
{
    static Triangle t(stirling2_step);
    return t;
}

Triangle& stirling1_table()
{
    static Triangle t(stirling1_step);
    return t;
}

void check_bell_args(std::int64_t n, std::int64_t k, std::size_t xs_len)
{
    if (n < 0 || k < 0) throw DomainError("Bell polynomial with a negative index");
    if (n < k) throw DomainError("Bell polynomial B(n,k) needs n >= k");
    if (xs_len != static_cast<std::size_t>(n - k + 1))
        throw UsageError("B(" + std::to_string(n) + "," + std::to_string(k) + ") takes " +
                         std::to_string(n - k + 1) + " arguments, got " + std::to_string(xs_len));
}

Rational sign_pow(std::int64_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void enumerate_rec(std::int64_t part, std::int64_t n_left, std::int64_t k_left, PartitionMultiSet& acc,
                   const std::function<void(const PartitionMultiSet&)>& visit)
{
    if (n_left == 0 && k_left == 0) {
        visit(acc);
        return;
    }
    if (part == 0 || k_left == 0) return;
    // each remaining block has size between 1 and part
    if (n_left > part * k_left || n_left < k_left) return;
    for (std::int64_t c = std::min(n_left / part, k_left); c >= 0; --c) {
        if (c > 0) acc.multiplicities.emplace_back(part, c);
        enumerate_rec(part - 1, n_left - c * part, k_left - c, acc, visit);
        if (c > 0) acc.multiplicities.pop_back();
    }
}

} // namespace

BigInt stirling2(std::int64_t n, std::int64_t k) { return stirling2_table().at(n, k); }

BigInt stirling2_explicit(std::int64_t n, std::int64_t k)
{
    if (n < 0) throw DomainError("Stirling number with negative n");
    if (k < 0 || k > n) return 0;
    BigInt sum = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n)); // 0^0 = 1
        BigInt t = binomial(k, j) * p;
        if ((k - j) % 2 == 0) sum += t;
        else sum -= t;
    }
    return sum / factorial(k);
}

BigInt stirling1_signed(std::int64_t n, std::int64_t k) { return stirling1_table().at(n, k); }

void enumerate_partitions(std::int64_t n, std::int64_t k, const std::function<void(const PartitionMultiSet&)>& visit)
{
    if (n < 0 || k < 0) return;
    PartitionMultiSet acc;
    if (n == 0) {
        if (k == 0) visit(acc);
        return;
    }
    enumerate_rec(n - k + 1, n, k, acc, visit);
}

Rational bell_partial_bruteforce(std::int64_t n, std::int64_t k, std::span<const Rational> xs)
{
    check_bell_args(n, k, xs.size());
    const BigInt nfact = factorial(n);
    Rational total;
    enumerate_partitions(n, k, [&](const PartitionMultiSet& p) {
        BigInt den = 1;
        Rational prod(1);
        for (auto [i, l] : p.multiplicities) {
            BigInt fi = factorial(i);
            BigInt fil;
            mpz_pow_ui(fil.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(l));
            den *= factorial(l) * fil;
            prod *= pow(xs[i - 1], static_cast<long>(l));
        }
        total += Rational(nfact, den) * prod;
    });
    return total;
}

Rational bell_partial_via_series(std::int64_t n, std::int64_t k, std::span<const Rational> xs)
{
    check_bell_args(n, k, xs.size());
    series::RationalSeries f(static_cast<std::size_t>(n));
    for (std::int64_t m = 1; m <= std::min(n - k + 1, n); ++m) f[m] = xs[m - 1] / Rational(factorial(m));
    auto fk = series::power(f, static_cast<unsigned>(k));
    return fk[n] * Rational(factorial(n)) / Rational(factorial(k));
}

Rational bell_half_closed(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) throw DomainError("bell_half_closed needs n >= k >= 0");
    return sign_pow(n + k) * double_factorial(2 * (n - k) - 1) * pow2(-n) * Rational(binomial(2 * n - k - 1, 2 * (n - k)));
}

Rational bell_x_alpha_one_closed(std::int64_t n, std::int64_t k, const Rational& alpha)
{
    if (k < 0 || n < k) throw DomainError("bell_x_alpha_one_closed needs n >= k >= 0");
    BigInt c = binomial(n, k) * binomial(k, n - k);
    if (c == 0) return Rational{};
    return Rational(factorial(n - k) * c) * pow2(-(n - k)) * pow(alpha, static_cast<long>(2 * k - n));
}

Rational bell_falling_closed(std::int64_t n, std::int64_t k, const Rational& alpha)
{
    if (k < 0 || n < k) throw DomainError("bell_falling_closed needs n >= k >= 0");
    Rational sum;
    for (std::int64_t l = 0; l <= k; ++l)
        sum += sign_pow(l) * Rational(binomial(k, l)) * falling_factorial(alpha * Rational(l), n);
    return sign_pow(k) * sum / Rational(factorial(k));
}

Rational p_kernel(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) throw DomainError("P(n,k) needs n >= k >= 0");
    return Rational(factorial(k)) * double_factorial(2 * (n - k) - 1) * Rational(binomial(2 * n - k - 1, 2 * (n - k)));
}

IdentityPair verify_lemma1(std::int64_t l, std::int64_t n)
{
    IdentityPair r;
    for (std::int64_t k = l; k <= n; ++k)
        r.lhs += Rational(binomial(2 * n - k - 1, n - 1) * k) * pow2(k);
    r.rhs = Rational(binomial(2 * n - l, n) * n) * pow2(l);
    return r;
}

IdentityPair verify_lemma2(std::int64_t k, std::int64_t l)
{
    if (k < 0 || l < 0) throw DomainError("verify_lemma2 needs k, l >= 0");
    IdentityPair r;
    for (std::int64_t m = 0; m <= k; ++m)
        r.lhs += sign_pow(m) * Rational(binomial(k, m)) * rational_binomial(Rational(BigInt(m), BigInt(2)), l);
    if (k <= l) r.rhs = sign_pow(l) * p_kernel(l, k) / double_factorial(2 * l);
    return r;
}

IdentityPair verify_cos_sin_identity(std::int64_t k)
{
    if (k < 0) throw DomainError("verify_cos_sin_identity needs k >= 0");
    IdentityPair r;
    for (std::int64_t l = 0; l <= k; ++l) r.lhs += pow(Rational(-2), static_cast<long>(l)) * Rational(binomial(l, k - l));
    r.rhs = Rational(sigma(k + 1));
    return r;
}

InversionCheck verify_inversion_pair(std::span<const Rational> s, std::span<const Rational> S, std::int64_t n)
{
    if (n < 1) throw DomainError("verify_inversion_pair needs n >= 1");
    if (s.size() < static_cast<std::size_t>(n) || S.size() < static_cast<std::size_t>(n))
        throw UsageError("verify_inversion_pair: sequences shorter than n");
    InversionCheck out;
    out.forward_holds = true;
    for (std::int64_t m = 1; m <= n && out.forward_holds; ++m) {
        Rational sum;
        for (std::int64_t k = 1; k <= m; ++k) sum += Rational(binomial(k, m - k)) * S[k - 1];
        out.forward_holds = sum == s[m - 1];
    }
    out.inverse.lhs = sign_pow(n) * Rational(n) * S[n - 1];
    for (std::int64_t k = 1; k <= n; ++k)
        out.inverse.rhs += Rational(binomial(2 * n - k - 1, n - 1) * k) * sign_pow(k) * s[k - 1];
    return out;
}

IdentityPair verify_stirling_product_identity(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) throw DomainError("verify_stirling_product_identity needs n >= k >= 0");
    IdentityPair r;
    for (std::int64_t m = k; m <= n; ++m)
        r.lhs += Rational(stirling1_signed(n, m) * stirling2(m, k)) * pow2(-m);
    r.rhs = sign_pow(n + k) * double_factorial(2 * (n - k) - 1) * pow2(-n) * Rational(binomial(2 * n - k - 1, 2 * (n - k)));
    return r;
}

} // namespace wilf::comb
