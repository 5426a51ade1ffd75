#pragma once

#include <iosfwd>
#include <string>

#include "wilf/rational.hpp"

namespace wilf {

// rat + pi * PI, an element of Q + Q*pi. Componentwise equality is exact
// equality because pi is transcendental.
struct PiLinear {
    Rational rat;
    Rational pi;

    PiLinear() = default;
    PiLinear(Rational r) : rat(std::move(r)) {}
    PiLinear(int r) : rat(r) {}
    PiLinear(Rational r, Rational p) : rat(std::move(r)), pi(std::move(p)) {}

    static PiLinear pi_times(Rational p) { return {Rational{}, std::move(p)}; }

    bool is_zero() const { return rat.is_zero() && pi.is_zero(); }
    bool is_rational() const { return pi.is_zero(); }

    PiLinear operator-() const { return {-rat, -pi}; }
    PiLinear& operator+=(const PiLinear& o);
    PiLinear& operator-=(const PiLinear& o);
    PiLinear& operator*=(const Rational& s);
    PiLinear& operator/=(const Rational& s);

    friend bool operator==(const PiLinear&, const PiLinear&) = default;
};

inline PiLinear operator+(PiLinear a, const PiLinear& b) { return a += b; }
inline PiLinear operator-(PiLinear a, const PiLinear& b) { return a -= b; }
inline PiLinear operator*(PiLinear a, const Rational& s) { return a *= s; }
inline PiLinear operator*(const Rational& s, PiLinear a) { return a *= s; }
inline PiLinear operator/(PiLinear a, const Rational& s) { return a /= s; }

// Defined only when at least one factor is rational; a genuine pi*pi
// product leaves the ring and throws DomainError.
PiLinear operator*(const PiLinear& a, const PiLinear& b);

// "r + s*pi" for humans; JSON uses the {"rat","pi"} record instead.
std::string to_string(const PiLinear& x);
std::ostream& operator<<(std::ostream& os, const PiLinear& x);

} // namespace wilf
