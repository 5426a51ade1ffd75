#pragma once

#include <cstddef>

#include "wilf/formal_series.hpp"

// Generating functions assembled from series arithmetic alone; they share
// no code with the closed forms in sequences.hpp except where noted.
namespace wilf::pipeline {

series::RationalSeries two_exp_minus_two(std::size_t order);  // 2e^-z - 2
series::RationalSeries sqrt_series(std::size_t order);        // sqrt(2e^-z - 1)
series::RationalSeries b_generating(std::size_t order);       // 1/(4 sqrt(2e^-z - 1))
series::RationalSeries e_series(std::size_t order);           // sqrt(e^x (2 - e^x))
series::RationalSeries recip_e_series(std::size_t order);     // 1/sqrt(e^x (2 - e^x)), coefficients (n+1) d_{n+1}
series::RationalSeries neg_sqrt_derivative(std::size_t order);// -(d/dz) sqrt(2e^-z - 1)

// W(z) by composing the arctan(sqrt w)/sqrt w coefficients at w = 1
// (closed form from sequences.hpp) with w - 1 = 2e^-z - 2.
series::PiSeries wilf_series(std::size_t order);
// Minus the rational part of wilf_series: sum c_n z^n.
series::RationalSeries c_generating(std::size_t order);

} // namespace wilf::pipeline
