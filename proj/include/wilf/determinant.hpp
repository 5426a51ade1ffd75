#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wilf/rational.hpp"

namespace wilf::series {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination with row pivoting. Square input only;
// the empty matrix has determinant 1.
BigInt bareiss_determinant(IntMatrix m);

// Clears row denominators, runs Bareiss over Z, divides back.
Rational determinant(const RationalMatrix& m);

// Coefficient beta_n of 1/(sum alpha_k x^k) as
// (-1)^n / alpha_0^(n+1) * det[alpha_{i-j+1}]_{i,j<n}, entries with a
// negative index being 0. Needs alphas[0..n]; alpha_0 = 0 is a DomainError.
Rational wronski_reciprocal(std::span<const Rational> alphas, std::size_t n);

// The n x n lower-Hessenberg Toeplitz matrix used above.
RationalMatrix wronski_matrix(std::span<const Rational> alphas, std::size_t n);

} // namespace wilf::series
