#include "wilf/rational.hpp"

#include <cctype>
#include <ostream>

#include "wilf/errors.hpp"

namespace wilf {

std::string to_string(const BigInt& z) { return z.get_str(10); }

namespace {

BigInt big_from(long long v)
{
    // mpz has no long long constructor; go through the decimal form.
    return BigInt(std::to_string(v), 10);
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

BigInt parse_int(std::string_view s)
{
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) throw UsageError("not an integer: '" + std::string(s) + "'");
    std::string t(s);
    if (t.front() == '+') t.erase(0, 1);
    return BigInt(t, 10);
}

} // namespace

Rational::Rational(long long v) : q_(big_from(v)) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    std::string_view den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
        throw UsageError("sign belongs on the numerator: '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), parse_int(den));
}

std::string Rational::str() const
{
    if (is_integer()) return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::operator-() const { return Rational(RawTag{}, mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x.is_zero()) throw DomainError("zero to a negative power");
        return Rational(1) / pow(x, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

} // namespace wilf
