#include "wilf/pi_linear.hpp"

#include <ostream>

#include "wilf/errors.hpp"

namespace wilf {

PiLinear& PiLinear::operator+=(const PiLinear& o)
{
    rat += o.rat;
    pi += o.pi;
    return *this;
}

PiLinear& PiLinear::operator-=(const PiLinear& o)
{
    rat -= o.rat;
    pi -= o.pi;
    return *this;
}

PiLinear& PiLinear::operator*=(const Rational& s)
{
    rat *= s;
    pi *= s;
    return *this;
}

PiLinear& PiLinear::operator/=(const Rational& s)
{
    rat /= s;
    pi /= s;
    return *this;
}

PiLinear operator*(const PiLinear& a, const PiLinear& b)
{
    if (b.is_rational()) return a * b.rat;
    if (a.is_rational()) return b * a.rat;
    throw DomainError("product of two values with pi parts leaves Q + Q*pi");
}

std::string to_string(const PiLinear& x)
{
    if (x.pi.is_zero()) return x.rat.str();
    std::string pi_part = x.pi == Rational(1) ? "pi" : "(" + x.pi.str() + ")*pi";
    if (x.rat.is_zero()) return pi_part;
    return x.rat.str() + " + " + pi_part;
}

std::ostream& operator<<(std::ostream& os, const PiLinear& x) { return os << to_string(x); }

} // namespace wilf
