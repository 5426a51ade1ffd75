#include "wilf/verify.hpp"

#include <functional>
#include <sstream>

#include "wilf/combinatorics.hpp"
#include "wilf/determinant.hpp"
#include "wilf/errors.hpp"
#include "wilf/factorials.hpp"
#include "wilf/pipelines.hpp"
#include "wilf/sequences.hpp"

namespace wilf::verify {

namespace {

using Failure = std::optional<std::string>;
using comb::IdentityPair;

std::string i2s(std::int64_t v) { return std::to_string(v); }

CheckResult sweep(std::string name, std::string range, const std::function<Failure()>& body)
{
    Failure f = body();
    return {std::move(name), std::move(range), !f.has_value(), f.value_or("")};
}

Failure mismatch(const std::string& where, const Rational& lhs, const Rational& rhs)
{
    return where + ": lhs = " + lhs.str() + ", rhs = " + rhs.str();
}

Failure mismatch(const std::string& where, const PiLinear& lhs, const PiLinear& rhs)
{
    return where + ": lhs = " + to_string(lhs) + ", rhs = " + to_string(rhs);
}

Failure pair_check(const std::string& where, const IdentityPair& p)
{
    if (p.holds()) return std::nullopt;
    return mismatch(where, p.lhs, p.rhs);
}

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }

Rational fact(std::int64_t n) { return Rational(factorial(n)); }

// deterministic small rationals for the Bell argument lists
std::vector<Rational> sample_xs(std::size_t len, unsigned seed)
{
    std::vector<Rational> xs;
    std::uint32_t s = seed * 2654435761u + 1u;
    for (std::size_t i = 0; i < len; ++i) {
        s = s * 1664525u + 1013904223u;
        long num = static_cast<long>((s >> 8) % 11) - 5;
        long den = static_cast<long>((s >> 20) % 4) + 1;
        xs.push_back(q(num, den));
    }
    return xs;
}

std::vector<CheckResult> lemma1_suite(std::int64_t B)
{
    std::vector<CheckResult> out;
    out.push_back(sweep("lemma1 central binomial sum", "1<=n<=" + i2s(B) + ", 0<=l<=n", [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n)
            for (std::int64_t l = 0; l <= n; ++l)
                if (auto f = pair_check("l=" + i2s(l) + " n=" + i2s(n), comb::verify_lemma1(l, n))) return f;
        return std::nullopt;
    }));
    out.push_back(sweep("lemma1 negative lower index", "1<=n<=" + i2s(B) + ", -50<=l<0", [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n)
            for (std::int64_t l = -50; l < 0; ++l)
                if (auto f = pair_check("l=" + i2s(l) + " n=" + i2s(n), comb::verify_lemma1(l, n))) return f;
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> lemma2_suite(std::int64_t B)
{
    return {sweep("lemma2 alternating binomial sum", "0<=k,l<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t k = 0; k <= B; ++k)
            for (std::int64_t l = 0; l <= B; ++l)
                if (auto f = pair_check("k=" + i2s(k) + " l=" + i2s(l), comb::verify_lemma2(k, l))) return f;
        return std::nullopt;
    })};
}

// P(n,k) identities; the sum runs to B, the rest to 3B/4
std::vector<CheckResult> kernel_suite(std::int64_t B)
{
    const std::int64_t B2 = B * 3 / 4;
    std::vector<CheckResult> out;
    out.push_back(sweep("sum_k P(n,k) = (2n-1)!!", "0<=n<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t n = 0; n <= B; ++n) {
            Rational s;
            for (std::int64_t k = 0; k <= n; ++k) s += comb::p_kernel(n, k);
            if (s != double_factorial(2 * n - 1)) return mismatch("n=" + i2s(n), s, double_factorial(2 * n - 1));
        }
        return std::nullopt;
    }));
    out.push_back(sweep("first/second kind Stirling product", "0<=k<=n<=" + i2s(B2), [B2]() -> Failure {
        for (std::int64_t n = 0; n <= B2; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                if (auto f = pair_check("n=" + i2s(n) + " k=" + i2s(k), comb::verify_stirling_product_identity(n, k)))
                    return f;
        return std::nullopt;
    }));
    out.push_back(sweep("kernel sum weighted by C(l,n-l)(-2)^l/l!", "0<=n<=" + i2s(B2), [B2]() -> Failure {
        for (std::int64_t n = 0; n <= B2; ++n)
            if (auto f = pair_check("n=" + i2s(n), seq::kernel_sum_identity(n))) return f;
        return std::nullopt;
    }));
    out.push_back(sweep("same with T(k) weights", "0<=n<=" + i2s(B2), [B2]() -> Failure {
        for (std::int64_t n = 0; n <= B2; ++n)
            if (auto f = pair_check("n=" + i2s(n), seq::kernel_t_identity(n))) return f;
        return std::nullopt;
    }));
    out.push_back(sweep("sum_l P(n,l) T(l) sigma-sum form", "0<=n<=" + i2s(B2), [B2]() -> Failure {
        for (std::int64_t n = 0; n <= B2; ++n)
            if (auto f = pair_check("n=" + i2s(n), seq::kernel_t_closed_identity(n))) return f;
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> inversion_suite(std::int64_t B)
{
    std::vector<CheckResult> out;
    out.push_back(sweep("inversion pair s=(-2)^n, S=(-1)^n 2 C(2n-1,n)", "1<=n<=" + i2s(B), [B]() -> Failure {
        std::vector<Rational> s, S;
        for (std::int64_t n = 1; n <= B; ++n) {
            s.push_back(pow(Rational(-2), n));
            S.push_back(Rational(n % 2 == 0 ? 2 : -2) * Rational(binomial(2 * n - 1, n)));
        }
        for (std::int64_t n = 1; n <= B; ++n) {
            auto r = comb::verify_inversion_pair(s, S, n);
            if (!r.forward_holds) return "n=" + i2s(n) + ": forward relation fails";
            if (auto f = pair_check("n=" + i2s(n), r.inverse)) return f;
        }
        return std::nullopt;
    }));
    out.push_back(sweep("sum (-1)^k C(k,n-k) C(2k-1,k) = (-1)^n 2^(n-1)", "1<=n<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n) {
            BigInt lhs = 0;
            for (std::int64_t k = 1; k <= n; ++k) {
                BigInt t = binomial(k, n - k) * binomial(2 * k - 1, k);
                lhs += k % 2 == 0 ? t : BigInt(-t);
            }
            Rational rhs = Rational(n % 2 == 0 ? 1 : -1) * pow2(n - 1);
            if (Rational(lhs) != rhs) return mismatch("n=" + i2s(n), Rational(lhs), rhs);
        }
        return std::nullopt;
    }));
    out.push_back(sweep("inversion pair S=(-2)^n, s=sigma(n+1)", "1<=n<=" + i2s(B), [B]() -> Failure {
        std::vector<Rational> s, S;
        for (std::int64_t n = 1; n <= B; ++n) {
            s.push_back(Rational(sigma(n + 1)));
            S.push_back(pow(Rational(-2), n));
        }
        for (std::int64_t n = 1; n <= B; ++n) {
            auto r = comb::verify_inversion_pair(s, S, n);
            if (!r.forward_holds) return "n=" + i2s(n) + ": forward relation fails";
            if (auto f = pair_check("n=" + i2s(n), r.inverse)) return f;
            if (r.inverse.rhs != Rational(n) * pow2(n)) return mismatch("n=" + i2s(n), r.inverse.rhs, Rational(n) * pow2(n));
        }
        return std::nullopt;
    }));
    out.push_back(sweep("sum (-2)^l C(l,k-l) = sigma(k+1)", "0<=k<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t k = 0; k <= B; ++k)
            if (auto f = pair_check("k=" + i2s(k), comb::verify_cos_sin_identity(k))) return f;
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> bell_suite(std::int64_t B)
{
    std::vector<CheckResult> out;
    auto range = "0<=k<=n<=" + i2s(B);
    auto each = [B](const std::function<Failure(std::int64_t, std::int64_t)>& body) -> Failure {
        for (std::int64_t n = 0; n <= B; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                if (auto f = body(n, k)) return f;
        return std::nullopt;
    };
    auto where = [](std::int64_t n, std::int64_t k) { return "n=" + i2s(n) + " k=" + i2s(k); };

    out.push_back(sweep("B(n,k)(1,...,1) = S(n,k)", range, [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            std::vector<Rational> ones(n - k + 1, Rational(1));
            Rational lhs = comb::bell_partial_bruteforce(n, k, ones);
            if (lhs != Rational(comb::stirling2(n, k))) return mismatch(where(n, k), lhs, Rational(comb::stirling2(n, k)));
            return std::nullopt;
        });
    }));
    out.push_back(sweep("B(n,k)(alpha,1,0,...,0) closed form", range + ", alpha in {-2,1/2,3}", [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            for (const Rational& a : {Rational(-2), q(1, 2), Rational(3)}) {
                std::vector<Rational> xs(n - k + 1);
                xs[0] = a;
                if (xs.size() > 1) xs[1] = 1;
                Rational lhs = comb::bell_partial_bruteforce(n, k, xs), rhs = comb::bell_x_alpha_one_closed(n, k, a);
                if (lhs != rhs) return mismatch(where(n, k) + " alpha=" + a.str(), lhs, rhs);
            }
            return std::nullopt;
        });
    }));
    out.push_back(sweep("B(n,k)(<1/2>_1,...) closed form", range, [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            std::vector<Rational> xs;
            for (std::int64_t i = 1; i <= n - k + 1; ++i) xs.push_back(falling_factorial(q(1, 2), i));
            Rational lhs = comb::bell_partial_bruteforce(n, k, xs), rhs = comb::bell_half_closed(n, k);
            if (lhs != rhs) return mismatch(where(n, k), lhs, rhs);
            return std::nullopt;
        });
    }));
    out.push_back(sweep("B(n,k)(<alpha>_1,...) falling-factorial sum", range + ", alpha in {1/2,2,-1/3}", [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            for (const Rational& a : {q(1, 2), Rational(2), q(-1, 3)}) {
                std::vector<Rational> xs;
                for (std::int64_t i = 1; i <= n - k + 1; ++i) xs.push_back(falling_factorial(a, i));
                Rational lhs = comb::bell_partial_bruteforce(n, k, xs), rhs = comb::bell_falling_closed(n, k, a);
                if (lhs != rhs) return mismatch(where(n, k) + " alpha=" + a.str(), lhs, rhs);
            }
            return std::nullopt;
        });
    }));
    out.push_back(sweep("B(n,k)(1,0,1,3,16,105,...) closed form", range, [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            std::vector<Rational> xs;
            for (std::int64_t i = 1; i <= n - k + 1; ++i) xs.push_back(seq::bell_sqrt_argument(i));
            Rational lhs = comb::bell_partial_bruteforce(n, k, xs), rhs = seq::bell_sqrt_special(n, k);
            if (lhs != rhs) return mismatch(where(n, k), lhs, rhs);
            return std::nullopt;
        });
    }));
    out.push_back(sweep("B(n,k) scaling by alpha beta^i", range + ", alpha,beta in {-2,-1,1/2,3}", [&]() {
        const Rational ab[] = {Rational(-2), Rational(-1), q(1, 2), Rational(3)};
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            auto xs = sample_xs(static_cast<std::size_t>(n - k + 1), static_cast<unsigned>(n * 31 + k));
            Rational base = comb::bell_partial_bruteforce(n, k, xs);
            for (const auto& a : ab)
                for (const auto& b : ab) {
                    std::vector<Rational> ys;
                    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(a * pow(b, static_cast<long>(i + 1)) * xs[i]);
                    Rational lhs = comb::bell_partial_bruteforce(n, k, ys), rhs = pow(a, k) * pow(b, n) * base;
                    if (lhs != rhs) return mismatch(where(n, k) + " alpha=" + a.str() + " beta=" + b.str(), lhs, rhs);
                }
            return std::nullopt;
        });
    }));
    out.push_back(sweep("partition sum = series extraction", range, [&]() {
        return each([&](std::int64_t n, std::int64_t k) -> Failure {
            auto xs = sample_xs(static_cast<std::size_t>(n - k + 1), static_cast<unsigned>(n * 17 + k * 5 + 3));
            Rational lhs = comb::bell_partial_bruteforce(n, k, xs), rhs = comb::bell_partial_via_series(n, k, xs);
            if (lhs != rhs) return mismatch(where(n, k), lhs, rhs);
            return std::nullopt;
        });
    }));
    out.push_back(sweep("S(n,k) explicit sum = triangle", "0<=k<=n<=" + i2s(5 * B), [B]() -> Failure {
        for (std::int64_t n = 0; n <= 5 * B; ++n)
            for (std::int64_t k = 0; k <= n; ++k)
                if (comb::stirling2(n, k) != comb::stirling2_explicit(n, k))
                    return mismatch("n=" + i2s(n) + " k=" + i2s(k), Rational(comb::stirling2(n, k)),
                                    Rational(comb::stirling2_explicit(n, k)));
        return std::nullopt;
    }));
    return out;
}

std::vector<Rational> coeffs_of(const series::RationalSeries& s) { return s.coeffs(); }

std::vector<CheckResult> determinant_suite(std::int64_t B)
{
    std::vector<CheckResult> out;
    auto range = "1<=n<=" + i2s(B);
    out.push_back(sweep("b_n from the sqrt-coefficient determinant", range, [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n)
            if (seq::b_via_determinant(n) != seq::b_seq(n)) return mismatch("n=" + i2s(n), seq::b_via_determinant(n), seq::b_seq(n));
        return std::nullopt;
    }));
    out.push_back(sweep("d_n from the b determinant", range, [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n)
            if (seq::d_via_determinant(n) != seq::d_seq(n)) return mismatch("n=" + i2s(n), seq::d_via_determinant(n), seq::d_seq(n));
        return std::nullopt;
    }));
    out.push_back(sweep("d_{n+1} from the e determinant, e_n from the (k+1)d_{k+1} determinant", range, [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n) {
            auto [d, e] = seq::d_e_determinants(n);
            if (d != seq::d_seq(n + 1)) return mismatch("d, n=" + i2s(n), d, seq::d_seq(n + 1));
            if (e != seq::e_seq(n)) return mismatch("e, n=" + i2s(n), e, seq::e_seq(n));
        }
        return std::nullopt;
    }));
    const std::int64_t W = B + 3;
    out.push_back(sweep("Wronski determinant = reciprocal recurrence", "0<=n<=" + i2s(W) + ", three series", [W]() -> Failure {
        const auto N = static_cast<std::size_t>(W);
        std::vector<std::pair<std::string, std::vector<Rational>>> inputs{
            {"sqrt(2e^-x - 1)", coeffs_of(pipeline::sqrt_series(N))},
            {"e^(x/2) sqrt(2 - e^x)", coeffs_of(pipeline::e_series(N))},
            {"sample", sample_xs(N + 1, 7)},
        };
        inputs[2].second[0] = q(3, 2);
        for (const auto& [name, alphas] : inputs) {
            auto rec = series::reciprocal(series::RationalSeries(alphas));
            for (std::size_t n = 0; n <= N; ++n) {
                Rational w = series::wronski_reciprocal(alphas, n);
                if (w != rec[n]) return mismatch(name + " n=" + std::to_string(n), w, rec[n]);
            }
        }
        return std::nullopt;
    }));
    return out;
}

std::vector<CheckResult> pipeline_suite(std::int64_t B)
{
    const auto N = static_cast<std::size_t>(B);
    const auto NE = static_cast<std::size_t>(B * 3 / 4);
    auto range = "0<=n<=" + i2s(B);
    auto range_e = "0<=n<=" + std::to_string(NE);
    std::vector<CheckResult> out;
    out.push_back(sweep("a_n closed form = composed series", range, [N]() -> Failure {
        auto w = pipeline::wilf_series(N);
        for (std::size_t n = 0; n <= N; ++n) {
            auto a = seq::a_coeff(static_cast<std::int64_t>(n)).value;
            if (a != w[n]) return mismatch("n=" + std::to_string(n), a, w[n]);
        }
        return std::nullopt;
    }));
    auto rational_match = [](const char* what, std::size_t N, const series::RationalSeries& s,
                             const std::function<Rational(std::int64_t)>& closed) -> Failure {
        for (std::size_t n = 0; n <= N; ++n) {
            Rational v = closed(static_cast<std::int64_t>(n));
            if (v != s[n]) return mismatch(std::string(what) + " n=" + std::to_string(n), v, s[n]);
        }
        return std::nullopt;
    };
    out.push_back(sweep("b_n = [x^n] 1/(4 sqrt(2e^-x - 1))", range, [&]() {
        return rational_match("b", N, pipeline::b_generating(N), seq::b_seq);
    }));
    out.push_back(sweep("c_n = -rational part of the composed series", range, [&]() {
        return rational_match("c", N, pipeline::c_generating(N), seq::c_seq);
    }));
    out.push_back(sweep("-d_n = [z^n] sqrt(1 + (2e^-z - 2))", range, [&]() {
        return rational_match("sqrt", N, pipeline::sqrt_series(N), seq::sqrt_series_coeff);
    }));
    out.push_back(sweep("e_n = [x^n] e^(x/2) sqrt(1 + (1 - e^x))", range_e, [&]() {
        return rational_match("e", NE, pipeline::e_series(NE), seq::e_seq);
    }));
    out.push_back(sweep("(n+1)d_{n+1} = reciprocal of the e series = -(sqrt)'", range_e, [&]() -> Failure {
        auto dn = [](std::int64_t n) { return Rational(n + 1) * seq::d_seq(n + 1); };
        if (auto f = rational_match("1/e", NE, pipeline::recip_e_series(NE), dn)) return f;
        return rational_match("-(sqrt)'", NE, pipeline::neg_sqrt_derivative(NE), dn);
    }));
    out.push_back(sweep("arctan(sqrt z)/sqrt z at 1: sigma form = kernel form", range, [B]() -> Failure {
        for (std::int64_t n = 0; n <= B; ++n)
            if (seq::arctan_sqrt_at1(n) != seq::arctan_sqrt_at1_kernel(n))
                return mismatch("n=" + i2s(n), seq::arctan_sqrt_at1(n), seq::arctan_sqrt_at1_kernel(n));
        return std::nullopt;
    }));
    out.push_back(sweep("a_n through 2F1 special values", range, [B]() -> Failure {
        for (std::int64_t n = 0; n <= B; ++n)
            if (seq::wilf_coeff_via_2f1(n) != seq::a_coeff(n).value)
                return mismatch("n=" + i2s(n), seq::wilf_coeff_via_2f1(n), seq::a_coeff(n).value);
        return std::nullopt;
    }));
    return out;
}

// u_n > 0, u_{n+1} >= u_n and u_n^2 <= u_{n-1} u_{n+1} on lo..B
Failure positive_increasing_log_convex(const std::function<Rational(std::int64_t)>& u, std::int64_t lo, std::int64_t B)
{
    for (std::int64_t n = lo; n <= B; ++n) {
        Rational un = u(n), next = u(n + 1);
        if (un.sign() <= 0) return "n=" + i2s(n) + ": not positive, u = " + un.str();
        if (next < un) return mismatch("n=" + i2s(n) + " increasing", un, next);
        if (n > lo && un * un > u(n - 1) * next) return mismatch("n=" + i2s(n) + " log-convex", un * un, u(n - 1) * next);
    }
    return std::nullopt;
}

std::vector<CheckResult> prefix_suite(std::int64_t B)
{
    std::vector<CheckResult> out;
    out.push_back(sweep("4n!b_n integer, positive, increasing, log-convex", "0<=n<=" + i2s(B), [B]() -> Failure {
        auto u = [](std::int64_t n) { return Rational(4) * fact(n) * seq::b_seq(n); };
        for (std::int64_t n = 0; n <= B + 1; ++n)
            if (!u(n).is_integer()) return "n=" + i2s(n) + ": 4n!b_n = " + u(n).str();
        return positive_increasing_log_convex(u, 0, B);
    }));
    out.push_back(sweep("v_n = (-1)^n sum (-1)^k S(n,k)(2k-2)!! positive, increasing, log-convex", "1<=n<=" + i2s(B), [B]() {
        return positive_increasing_log_convex([](std::int64_t n) { return Rational(seq::log_convex_companion(n)); }, 1, B);
    }));
    out.push_back(sweep("d_n >= 0", "1<=n<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t n = 1; n <= B; ++n)
            if (seq::d_seq(n).sign() < 0) return "n=" + i2s(n) + ": d_n = " + seq::d_seq(n).str();
        return std::nullopt;
    }));
    out.push_back(sweep("2n!c_n, n!d_n, n!e_n integers", "0<=n<=" + i2s(B), [B]() -> Failure {
        for (std::int64_t n = 0; n <= B; ++n) {
            if (n >= 1 && !(Rational(2) * fact(n) * seq::c_seq(n)).is_integer()) return "n=" + i2s(n) + ": 2n!c_n not integral";
            if (!(fact(n) * seq::d_seq(n)).is_integer()) return "n=" + i2s(n) + ": n!d_n not integral";
            if (!(fact(n) * seq::e_seq(n)).is_integer()) return "n=" + i2s(n) + ": n!e_n not integral";
        }
        return std::nullopt;
    }));
    out.push_back(sweep("(n+1)! b_{n+1} = 1/4 + sum [C(n+1,j)-1] j! b_j", "0<=n<=" + i2s(B / 2), [B]() -> Failure {
        for (std::int64_t n = 0; n <= B / 2; ++n) {
            Rational lhs = fact(n + 1) * seq::b_seq(n + 1), rhs = seq::b_recursion_rhs(n);
            if (lhs != rhs) return mismatch("n=" + i2s(n), lhs, rhs);
        }
        return std::nullopt;
    }));
    out.push_back(sweep("T(4m-1) = T(4m)", "1<=m<=" + i2s(B / 4), [B]() -> Failure {
        for (std::int64_t m = 1; m <= B / 4; ++m)
            if (seq::t_seq(4 * m - 1) != seq::t_seq(4 * m)) return mismatch("m=" + i2s(m), seq::t_seq(4 * m - 1), seq::t_seq(4 * m));
        return std::nullopt;
    }));
    // Open conjectures: b_n and c_n increasing and convex on all of N_0. Advisory only.
    auto conjecture = [&out](const char* name, const std::string& range, const std::function<Failure()>& body) {
        out.push_back(sweep(std::string("conjecture: ") + name, range, body));
        out.back().advisory = true;
    };
    for (auto [name, f] : {std::pair{"b", &seq::b_seq}, std::pair{"c", &seq::c_seq}}) {
        conjecture((std::string(name) + "_n increasing").c_str(), "0<=n<=" + i2s(B), [B, f]() -> Failure {
            for (std::int64_t n = 0; n < B; ++n)
                if (f(n + 1) < f(n)) return mismatch("n=" + i2s(n), f(n), f(n + 1));
            return std::nullopt;
        });
        conjecture((std::string(name) + "_n convex").c_str(), "1<=n<" + i2s(B), [B, f]() -> Failure {
            for (std::int64_t n = 1; n < B; ++n) {
                Rational second = f(n + 1) - Rational(2) * f(n) + f(n - 1);
                if (second.sign() < 0) return "n=" + i2s(n) + ": second difference " + second.str();
            }
            return std::nullopt;
        });
    }
    return out;
}

using SuiteFn = std::vector<CheckResult> (*)(std::int64_t);

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> r{
        {{"lemma1", 60, 300}, lemma1_suite},
        {{"lemma2", 25, 80}, lemma2_suite},
        {{"kernel", 40, 120}, kernel_suite},
        {{"inversion", 40, 400}, inversion_suite},
        {{"bell", 12, 16}, bell_suite},
        {{"determinants", 12, 40}, determinant_suite},
        {{"pipeline", 20, 60}, pipeline_suite},
        {{"prefix-properties", 60, 300}, prefix_suite},
    };
    return r;
}

} // namespace

const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> s = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return s;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::optional<std::int64_t> bound)
{
    if (suite == "all") {
        if (bound) throw UsageError("'all' runs every suite at its default bound; pass no bound");
        std::vector<CheckResult> out;
        for (const auto& e : registry()) {
            auto part = e.run(e.info.default_bound);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    for (const auto& e : registry()) {
        if (e.info.name != suite) continue;
        std::int64_t b = bound.value_or(e.info.default_bound);
        if (b < 1 || b > e.info.cap)
            throw UsageError("bound for '" + suite + "' must lie in 1.." + std::to_string(e.info.cap));
        return e.run(b);
    }
    throw UsageError("unknown suite '" + suite + "'");
}

bool all_pass(const std::vector<CheckResult>& results)
{
    for (const auto& r : results)
        if (!r.pass && !r.advisory) return false;
    return true;
}

} // namespace wilf::verify
