#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "wilf/errors.hpp"
#include "wilf/factorials.hpp"
#include "wilf/pi_linear.hpp"
#include "wilf/rational.hpp"

using namespace wilf;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

// sigma(k) = Im((-1+i)^k), since -1+i = sqrt2 e^(3 pi i/4); exact Gaussian integers
BigInt sigma_gaussian(int k)
{
    BigInt re = 1, im = 0;
    for (int j = 0; j < k; ++j) {
        BigInt nre = -re - im;
        BigInt nim = re - im;
        re = nre;
        im = nim;
    }
    return im;
}

} // namespace

TEST_CASE("rational canonical form and parsing")
{
    CHECK(q(6, -4) == q(-3, 2));
    CHECK(q(6, -4).str() == "-3/2");
    CHECK(q(8, 4).str() == "2");
    CHECK(Rational::parse("-10/4") == q(-5, 2));
    CHECK(Rational::parse("7") == q(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), UsageError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), UsageError);
    CHECK_THROWS_AS(q(1) / Rational(0), DomainError);
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(pow(q(2, 3), -2) == q(9, 4));
    CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("rational field axioms on random samples")
{
    gen::Lcg rng(11);
    for (int i = 0; i < 300; ++i) {
        auto a = rng.small_rational(), b = rng.small_rational(), c = rng.nonzero_rational();
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a / c) * c == a);
        CHECK(Rational::parse(a.str()) == a);
        CHECK((a < b) == (a.to_double() < b.to_double() && a != b));
    }
}

TEST_CASE("double factorial")
{
    CHECK(double_factorial(-1) == q(1));
    CHECK(double_factorial(-3) == q(-1));
    CHECK(double_factorial(5) == q(15));
    CHECK(double_factorial(6) == q(48));
    CHECK(double_factorial(0) == q(1));
    CHECK(double_factorial(-5) == q(1, 3));
    CHECK(double_factorial(-7) == q(-1, 15));
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
    for (int m = 1; m <= 60; ++m) CHECK(double_factorial(m) * double_factorial(m - 1) == Rational(factorial(m)));
}

TEST_CASE("falling and rising factorials")
{
    CHECK(falling_factorial(q(0), 0) == q(1));
    CHECK(falling_factorial(q(0), 3) == q(0));
    CHECK(falling_factorial(q(1, 2), 2) == q(-1, 4));
    CHECK(rising_factorial(q(1, 2), 2) == q(3, 4));
    CHECK(rising_factorial(q(0), 0) == q(1));
    for (int n = 0; n <= 20; ++n) CHECK(rising_factorial(q(1), n) == Rational(factorial(n)));
    gen::Lcg rng(5);
    for (int i = 0; i < 100; ++i) {
        auto x = rng.small_rational();
        auto n = rng.range(0, 12);
        // (x)_n = (-1)^n <-x>_n
        Rational sign = n % 2 ? q(-1) : q(1);
        CHECK(rising_factorial(x, n) == sign * falling_factorial(-x, n));
    }
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);
    // Pascal's rule over negative and positive upper indices
    for (int n = -30; n <= 30; ++n)
        for (int k = 1; k <= 30; ++k) CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));

    CHECK(rational_binomial(q(1, 2), 2) == q(-1, 8));
    CHECK(rational_binomial(q(7, 3), 0) == q(1));
    CHECK(rational_binomial(q(3), 2) == q(3));
    for (int n = 0; n <= 25; ++n)
        for (int l = 0; l <= 30; ++l) CHECK(rational_binomial(q(n), l) == Rational(binomial(n, l)));
}

TEST_CASE("sigma")
{
    CHECK(sigma(0) == 0);
    CHECK(sigma(1) == 1);
    CHECK(sigma(2) == -2);
    CHECK(sigma(3) == 2);
    CHECK(sigma(5) == -4);
    for (int k = 0; k <= 200; ++k) {
        BigInt s = sigma(k);
        CHECK(s == sigma_gaussian(k));
        CHECK(s * s <= (BigInt(1) << k));
        if (k % 4 == 0) CHECK(s == 0);
        // floating cross-check where doubles are exact enough
        if (k <= 40) {
            double expect = std::pow(2.0, k / 2.0) * std::sin(3.0 * k * 3.14159265358979323846 / 4.0);
            CHECK(std::abs(s.get_d() - expect) < 1e-6 * (1 + std::abs(expect)));
        }
    }
}

TEST_CASE("pi-linear arithmetic")
{
    PiLinear a{q(1, 2), q(3)};
    PiLinear b{q(-1, 3), q(1, 4)};
    auto s = a + b;
    CHECK(s.rat == q(1, 6));
    CHECK(s.pi == q(13, 4));
    CHECK((a - a).is_zero());
    CHECK((a * q(2)).pi == q(6));
    CHECK(to_string(PiLinear{q(0), q(1, 4)}) == "(1/4)*pi");
    CHECK(to_string(PiLinear{q(-1, 2), q(1, 4)}) == "-1/2 + (1/4)*pi");
    PiLinear r{q(2), q(0)};
    CHECK((a * r).rat == q(1));
    CHECK((a * r).pi == q(6));
    CHECK_THROWS_AS(a * b, DomainError);

    gen::Lcg rng(17);
    for (int i = 0; i < 200; ++i) {
        PiLinear x{rng.small_rational(), rng.small_rational()};
        PiLinear y{rng.small_rational(), rng.small_rational()};
        auto z = x + y;
        CHECK(z.rat == x.rat + y.rat);
        CHECK(z.pi == x.pi + y.pi);
    }
}
