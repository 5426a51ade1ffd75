#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wilf/errors.hpp"
#include "wilf/pi_linear.hpp"
#include "wilf/rational.hpp"

namespace wilf::series {

// Truncated power series sum_{n<=order} c_n x^n. The order is carried
// explicitly; binary operations truncate to the smaller order.
template <class Ring>
class FormalSeries {
public:
    explicit FormalSeries(std::size_t order) : c_(order + 1) {}
    explicit FormalSeries(std::vector<Ring> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) throw UsageError("a series needs at least a constant term");
    }

    std::size_t order() const { return c_.size() - 1; }
    const Ring& operator[](std::size_t n) const { return c_.at(n); }
    Ring& operator[](std::size_t n) { return c_.at(n); }
    const std::vector<Ring>& coeffs() const { return c_; }

    FormalSeries truncated(std::size_t order) const
    {
        if (order > this->order()) throw UsageError("cannot raise the order of a truncated series");
        return FormalSeries(std::vector<Ring>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
    }

    friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

private:
    std::vector<Ring> c_;
};

using RationalSeries = FormalSeries<Rational>;
using PiSeries = FormalSeries<PiLinear>;

template <class Ring>
FormalSeries<Ring> operator+(const FormalSeries<Ring>& a, const FormalSeries<Ring>& b)
{
    FormalSeries<Ring> r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

template <class Ring>
FormalSeries<Ring> operator-(const FormalSeries<Ring>& a, const FormalSeries<Ring>& b)
{
    FormalSeries<Ring> r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

template <class Ring>
FormalSeries<Ring> scale(const FormalSeries<Ring>& a, const Rational& s)
{
    FormalSeries<Ring> r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r[n] = a[n] * s;
    return r;
}

// Cauchy product. Rational x PiLinear promotes to PiLinear; PiLinear x
// PiLinear only succeeds while one side of every product is rational.
template <class A, class B>
auto mul(const FormalSeries<A>& a, const FormalSeries<B>& b)
{
    using R = decltype(std::declval<A>() * std::declval<B>());
    FormalSeries<R> r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (a[i] == A{}) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class Ring>
FormalSeries<Ring> power(const FormalSeries<Ring>& a, unsigned k)
{
    FormalSeries<Ring> result(a.order());
    result[0] = Ring(1);
    FormalSeries<Ring> base = a;
    while (k) {
        if (k & 1u) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

// outer(inner(x)) for inner(0) = 0, by Horner in the inner series.
template <class Ring>
FormalSeries<Ring> compose_vanishing(const FormalSeries<Ring>& outer, const RationalSeries& inner)
{
    if (!inner[0].is_zero()) throw UsageError("compose_vanishing: inner series has a nonzero constant term");
    const std::size_t N = std::min(outer.order(), inner.order());
    const RationalSeries g = inner.truncated(N);
    FormalSeries<Ring> acc(N);
    for (std::size_t i = N + 1; i-- > 0;) {
        acc = mul(acc, g);
        acc[0] += outer[i];
    }
    return acc;
}

inline RationalSeries reciprocal(const RationalSeries& a)
{
    if (a[0].is_zero()) throw DomainError("reciprocal of a series with zero constant term");
    RationalSeries b(a.order());
    const Rational inv = Rational(1) / a[0];
    b[0] = inv;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational s;
        for (std::size_t k = 1; k <= n; ++k) s += a[k] * b[n - k];
        b[n] = -s * inv;
    }
    return b;
}

// (1+u)^(1/2) for u(0) = 0 as the binomial series composed with u.
inline RationalSeries sqrt_one_plus(const RationalSeries& u)
{
    if (!u[0].is_zero()) throw UsageError("sqrt_one_plus: argument has a nonzero constant term");
    RationalSeries binom(u.order());
    binom[0] = 1;
    const Rational half(BigInt(1), BigInt(2));
    for (std::size_t n = 1; n <= u.order(); ++n)
        binom[n] = binom[n - 1] * (half - Rational(n - 1)) / Rational(n);
    return compose_vanishing(binom, u);
}

// e^(c x): coefficients c^n / n!.
inline RationalSeries exp_arg_series(const Rational& c, std::size_t order)
{
    RationalSeries r(order);
    r[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) r[n] = r[n - 1] * c / Rational(n);
    return r;
}

// Loses one order: the top coefficient has no successor to differentiate.
template <class Ring>
FormalSeries<Ring> derivative(const FormalSeries<Ring>& a)
{
    if (a.order() == 0) return FormalSeries<Ring>(0);
    FormalSeries<Ring> r(a.order() - 1);
    for (std::size_t n = 0; n < a.order(); ++n) r[n] = a[n + 1] * Rational(n + 1);
    return r;
}

// Gains one order; the constant of integration is 0.
template <class Ring>
FormalSeries<Ring> integrate(const FormalSeries<Ring>& a)
{
    FormalSeries<Ring> r(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) r[n + 1] = a[n] / Rational(n + 1);
    return r;
}

template <class Ring>
constexpr const char* ring_name();
template <>
constexpr const char* ring_name<Rational>() { return "rational"; }
template <>
constexpr const char* ring_name<PiLinear>() { return "pi-linear"; }

} // namespace wilf::series
