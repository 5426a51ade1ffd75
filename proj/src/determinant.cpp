#include "wilf/determinant.hpp"

#include <utility>

#include "wilf/errors.hpp"

namespace wilf::series {

BigInt bareiss_determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw UsageError("determinant of a non-square matrix");
    if (n == 0) return 1;

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    BigInt d = m[n - 1][n - 1];
    return sign < 0 ? BigInt(-d) : d;
}

Rational determinant(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    IntMatrix z(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw UsageError("determinant of a non-square matrix");
        BigInt l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        z[i].reserve(n);
        for (const auto& x : m[i]) z[i].push_back(x.numerator() * (l / x.denominator()));
        scale *= l;
    }
    return Rational(bareiss_determinant(std::move(z)), scale);
}

RationalMatrix wronski_matrix(std::span<const Rational> alphas, std::size_t n)
{
    if (alphas.size() < n + 1) throw UsageError("wronski_matrix: need alpha_0 .. alpha_n");
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i + 1 && j < n; ++j) m[i][j] = alphas[i + 1 - j];
    return m;
}

Rational wronski_reciprocal(std::span<const Rational> alphas, std::size_t n)
{
    if (alphas.empty() || alphas[0].is_zero()) throw DomainError("wronski_reciprocal: alpha_0 must be nonzero");
    Rational d = determinant(wronski_matrix(alphas, n));
    Rational r = d / pow(alphas[0], static_cast<long>(n + 1));
    return n % 2 == 0 ? r : -r;
}

} // namespace wilf::series
