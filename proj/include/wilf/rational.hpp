#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wilf {

using BigInt = mpz_class;

std::string to_string(const BigInt& z);

// Reduced fraction p/q with q > 0. Every constructor and operation
// canonicalizes, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v);
    Rational(unsigned v) : q_(static_cast<unsigned long>(v)) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(const BigInt& z) : q_(z) {}
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p", "-p", "p/q"; throws UsageError on junk, DomainError on q = 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "p/q", q omitted when 1.
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct RawTag {};
    Rational(RawTag, mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

Rational abs(const Rational& x);
// x^e for any integer e; 0^0 = 1, 0^(negative) is a DomainError.
Rational pow(const Rational& x, long e);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace wilf
