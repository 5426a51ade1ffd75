#include "wilf/pipelines.hpp"

#include "wilf/sequences.hpp"

namespace wilf::pipeline {

using series::PiSeries;
using series::RationalSeries;

RationalSeries two_exp_minus_two(std::size_t order)
{
    RationalSeries s = series::scale(series::exp_arg_series(Rational(-1), order), Rational(2));
    s[0] -= Rational(2);
    return s;
}

RationalSeries sqrt_series(std::size_t order) { return series::sqrt_one_plus(two_exp_minus_two(order)); }

RationalSeries b_generating(std::size_t order)
{
    return series::scale(series::reciprocal(sqrt_series(order)), Rational(BigInt(1), BigInt(4)));
}

RationalSeries e_series(std::size_t order)
{
    // e^(x/2) * sqrt(1 + (1 - e^x))
    RationalSeries u = series::scale(series::exp_arg_series(Rational(1), order), Rational(-1));
    u[0] += Rational(1);
    return series::mul(series::exp_arg_series(Rational(BigInt(1), BigInt(2)), order), series::sqrt_one_plus(u));
}

RationalSeries recip_e_series(std::size_t order) { return series::reciprocal(e_series(order)); }

RationalSeries neg_sqrt_derivative(std::size_t order)
{
    return series::scale(series::derivative(sqrt_series(order + 1)), Rational(-1));
}

PiSeries wilf_series(std::size_t order)
{
    PiSeries outer(order);
    for (std::size_t n = 0; n <= order; ++n) outer[n] = seq::arctan_sqrt_at1(static_cast<std::int64_t>(n));
    return series::compose_vanishing(outer, two_exp_minus_two(order));
}

RationalSeries c_generating(std::size_t order)
{
    PiSeries w = wilf_series(order);
    RationalSeries c(order);
    for (std::size_t n = 0; n <= order; ++n) c[n] = -w[n].rat;
    return c;
}

} // namespace wilf::pipeline
