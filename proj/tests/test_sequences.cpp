#include <doctest.h>

#include "wilf/combinatorics.hpp"
#include "wilf/determinant.hpp"
#include "wilf/factorials.hpp"
#include "wilf/real.hpp"
#include "wilf/sequences.hpp"

using namespace wilf;
using namespace wilf::seq;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }
Rational qs(const char* s) { return Rational::parse(s); }
PiLinear pl(const Rational& r, const Rational& p) { return PiLinear{r, p}; }

// Test-local series arithmetic on plain coefficient vectors, kept apart
// from the library's series module.
using Vec = std::vector<Rational>;

Vec conv(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Vec exp_coeffs(const Rational& c, std::size_t N)
{
    Vec r(N + 1);
    Rational term(1);
    for (std::size_t n = 0; n <= N; ++n) {
        r[n] = term;
        term = term * c / q(static_cast<long>(n) + 1);
    }
    return r;
}

// square root of a series with constant term 1: s_n = (g_n - sum_{0<i<n} s_i s_{n-i}) / 2
Vec sqrt_coeffs(const Vec& g)
{
    Vec s(g.size());
    s[0] = q(1);
    for (std::size_t n = 1; n < g.size(); ++n) {
        Rational acc = g[n];
        for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
        s[n] = acc / q(2);
    }
    return s;
}

Vec recip_coeffs(const Vec& a)
{
    Vec r(a.size());
    r[0] = q(1) / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) acc += a[i] * r[n - i];
        r[n] = -acc / a[0];
    }
    return r;
}

// Taylor coefficients of arctan(sqrt w)/sqrt w at w = 1 + u from the ODE
// 2(1+u) f' + f = 1/(2+u).
std::vector<PiLinear> arctan_sqrt_ode(std::size_t N)
{
    std::vector<PiLinear> f(N + 1);
    f[0] = PiLinear::pi_times(q(1, 4));
    for (std::size_t n = 0; n < N; ++n) {
        const long nn = static_cast<long>(n);
        Rational rhs = q(n % 2 ? -1 : 1) / pow(q(2), nn + 1);
        PiLinear num = PiLinear{rhs, q(0)} - f[n] * q(2 * nn + 1);
        f[n + 1] = num / q(2 * (nn + 1));
    }
    return f;
}

// arctan(z)/z at z = 1 + h: A' = 1/(2 + 2h + h^2), then divide by 1 + h
std::vector<PiLinear> arctan_over_z_oracle(std::size_t N)
{
    Vec den(N + 1, q(0));
    den[0] = q(2);
    if (N >= 1) den[1] = q(2);
    if (N >= 2) den[2] = q(1);
    Vec dA = recip_coeffs(den);
    std::vector<PiLinear> A(N + 1);
    A[0] = PiLinear::pi_times(q(1, 4));
    for (std::size_t n = 1; n <= N; ++n) A[n] = PiLinear{dA[n - 1] / q(static_cast<long>(n)), q(0)};
    std::vector<PiLinear> G(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
        for (std::size_t j = 0; j <= n; ++j) G[n] += A[j] * q((n - j) % 2 ? -1 : 1);
    return G;
}

// W coefficients by composing the ODE coefficients with u = 2e^-z - 2
std::vector<PiLinear> wilf_oracle(std::size_t N)
{
    auto f = arctan_sqrt_ode(N);
    Vec u = exp_coeffs(q(-1), N);
    for (auto& c : u) c *= q(2);
    u[0] = q(0);
    std::vector<PiLinear> w(N + 1);
    Vec upow(N + 1, q(0));
    upow[0] = q(1);
    for (std::size_t k = 0; k <= N; ++k) {
        for (std::size_t n = 0; n <= N; ++n) w[n] += f[k] * upow[n];
        upow = conv(upow, u);
    }
    return w;
}

// F_n = 2F1(n+1/2, n+1; n+3/2; -1) = (2n+1) J(n, n+1), J(m,p) = int_0^1 t^(2m)/(1+t^2)^p dt
PiLinear f21_oracle(long n)
{
    std::vector<PiLinear> J0(static_cast<std::size_t>(n) + 2);
    J0[1] = PiLinear::pi_times(q(1, 4));
    for (long p = 1; p <= n; ++p)
        J0[static_cast<std::size_t>(p) + 1] = J0[static_cast<std::size_t>(p)] * q(2 * p - 1, 2 * p) +
                                              PiLinear{q(1, 2 * p) / pow(q(2), p), q(0)};
    // J(m,p) = J(m-1,p-1) - J(m-1,p), J(m,0) = 1/(2m+1)
    std::vector<std::vector<PiLinear>> J(static_cast<std::size_t>(n) + 1, std::vector<PiLinear>(static_cast<std::size_t>(n) + 2));
    for (long p = 0; p <= n + 1; ++p) J[0][static_cast<std::size_t>(p)] = p == 0 ? PiLinear{q(1), q(0)} : J0[static_cast<std::size_t>(p)];
    for (long m = 1; m <= n; ++m) {
        J[static_cast<std::size_t>(m)][0] = PiLinear{q(1, 2 * m + 1), q(0)};
        for (long p = 1; p <= n + 1; ++p)
            J[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)] =
                J[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(p) - 1] - J[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(p)];
    }
    return J[static_cast<std::size_t>(n)][static_cast<std::size_t>(n) + 1] * q(2 * n + 1);
}

// sigma from Gaussian integers: Im((-1+i)^k)
Rational sigma_oracle(long k)
{
    BigInt re = 1, im = 0;
    for (long j = 0; j < k; ++j) {
        BigInt nre = -re - im;
        im = re - im;
        re = nre;
    }
    return Rational(im);
}

series::RationalMatrix banded(const std::function<Rational(long)>& entry, long n)
{
    series::RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = i - j + 1 >= 0 ? entry(i - j + 1) : q(0);
    return m;
}

const char* kTable1B[] = {"1/4", "1/4", "1/4", "7/24", "35/96", "113/240", "1787/2880", "16717/20160",
                          "2257/2016", "315883/207360", "4324721/2073600", "447448/155925"};
const char* kTable1C[] = {"0", "1/2", "3/4", "11/12", "55/48", "71/48", "2807/1440", "8753/3360",
                          "94541/26880", "694663/145152", "47552791/7257600", "719718067/79833600"};
const char* kT[] = {"0", "-1/2", "-3/4", "-5/6", "-5/6", "-97/120", "-63/80", "-109/140", "-109/140",
                    "-7883/10080", "-15829/20160"};
const char* kFactD[] = {"-1", "1", "0", "1", "3", "16", "105", "841", "7938", "86311", "1062435", "14605306",
                        "221790723", "3687263581", "66609892440", "1299237505021", "27213601303983",
                        "609223983928576", "14516520372130245", "366820998284761861", "9798039716677045218",
                        "275837214061454446171"};
const char* kFactE[] = {"1", "0", "-1", "-3", "-10", "-45", "-271", "-2058"};

} // namespace

TEST_CASE("T(n)")
{
    for (long n = 0; n <= 10; ++n) CHECK(t_seq(n) == qs(kT[n]));
    for (long m = 1; m <= 15; ++m) CHECK(t_seq(4 * m - 1) == t_seq(4 * m));
    Rational t;
    for (long n = 0; n <= 80; ++n) {
        if (n > 0) t += q(n % 2 ? -1 : 1) * sigma_oracle(n) / (pow(q(2), n) * q(n));
        CHECK(t_seq(n) == t);
    }
}

TEST_CASE("arctan(z)/z at 1")
{
    CHECK(arctan_over_z_at1(0) == PiLinear::pi_times(q(1, 4)));
    CHECK(arctan_over_z_at1(1) == pl(q(1, 2), q(-1, 4)));
    auto g = arctan_over_z_oracle(40);
    for (long n = 0; n <= 40; ++n) CHECK(arctan_over_z_at1(n) == g[static_cast<std::size_t>(n)]);

    // sum_n (pi/4 + T(n)) = 1
    const mpfr_prec_t bits = numeric::digits_to_bits(40);
    numeric::Real sum(0, bits);
    const numeric::Real quarter_pi = numeric::Real::pi(bits) / numeric::Real(4, bits);
    for (long n = 0; n <= 300; ++n) sum += quarter_pi + numeric::Real(t_seq(n), bits);
    CHECK(abs(sum - numeric::Real(1, bits)) < numeric::Real(Rational(BigInt(1), BigInt(10) * BigInt("1000000000000000000000000000000")), bits));
}

TEST_CASE("arctan(sqrt w)/sqrt w at 1")
{
    CHECK(arctan_sqrt_at1(0) == PiLinear::pi_times(q(1, 4)));
    CHECK(arctan_sqrt_at1(1) == pl(q(1, 4), q(-1, 8)));
    auto f = arctan_sqrt_ode(40);
    for (long n = 0; n <= 40; ++n) {
        CHECK(arctan_sqrt_at1(n) == f[static_cast<std::size_t>(n)]);
        CHECK(arctan_sqrt_at1_kernel(n) == f[static_cast<std::size_t>(n)]);
        // pi part times (2n)!! is (-1)^n (2n-1)!!/4
        CHECK(arctan_sqrt_at1(n).pi * double_factorial(2 * n) == q(n % 2 ? -1 : 1) * double_factorial(2 * n - 1) / q(4));
    }
}

TEST_CASE("sqrt(2e^-z - 1) coefficients and d_n")
{
    CHECK(sqrt_series_coeff(0) == q(1));
    CHECK(sqrt_series_coeff(1) == q(-1));
    CHECK(d_seq(2) == q(0));
    Vec g = exp_coeffs(q(-1), 40);
    for (auto& c : g) c *= q(2);
    g[0] -= q(1);
    Vec s = sqrt_coeffs(g);
    for (long n = 0; n <= 40; ++n) {
        CHECK(sqrt_series_coeff(n) == s[static_cast<std::size_t>(n)]);
        CHECK(d_seq(n) == -s[static_cast<std::size_t>(n)]);
    }
    for (long n = 0; n <= 21; ++n) CHECK(d_seq(n) * Rational(factorial(n)) == qs(kFactD[n]));
}

TEST_CASE("e_n")
{
    CHECK(e_seq(0) == q(1));
    for (long n = 0; n <= 7; ++n) CHECK(e_seq(n) * Rational(factorial(n)) == qs(kFactE[n]));
    // e^x (2 - e^x) = 2e^x - e^(2x)
    Vec g = exp_coeffs(q(1), 30), g2 = exp_coeffs(q(2), 30);
    for (std::size_t n = 0; n <= 30; ++n) g[n] = q(2) * g[n] - g2[n];
    Vec s = sqrt_coeffs(g);
    for (long n = 0; n <= 30; ++n) CHECK(e_seq(n) == s[static_cast<std::size_t>(n)]);
}

TEST_CASE("b_n and c_n")
{
    for (long n = 0; n <= 11; ++n) {
        CHECK(b_seq(n) == qs(kTable1B[n]));
        CHECK(c_seq(n) == qs(kTable1C[n]));
    }
    CHECK(c_seq(0) == q(0));

    // (n+1)! b_{n+1} = 1/4 + sum_{j=1}^{n} [C(n+1,j) - 1] j! b_j
    for (long n = 0; n <= 30; ++n) {
        Rational rhs = q(1, 4);
        for (long j = 1; j <= n; ++j) rhs += (Rational(binomial(n + 1, j)) - q(1)) * Rational(factorial(j)) * b_seq(j);
        CHECK(Rational(factorial(n + 1)) * b_seq(n + 1) == rhs);
        CHECK(b_recursion_rhs(n) == rhs);
    }

    Vec g = exp_coeffs(q(-1), 30);
    for (auto& c : g) c *= q(2);
    g[0] -= q(1);
    Vec b = recip_coeffs(sqrt_coeffs(g));
    for (long n = 0; n <= 30; ++n) CHECK(b_seq(n) == b[static_cast<std::size_t>(n)] / q(4));
}

TEST_CASE("Wilf coefficients")
{
    CHECK(a_coeff(0).value == PiLinear::pi_times(q(1, 4)));
    CHECK(a_coeff(1).value == pl(q(-1, 2), q(1, 4)));
    auto w = wilf_oracle(25);
    for (long n = 0; n <= 25; ++n) {
        auto a = a_coeff(n);
        CHECK(a.n == n);
        CHECK(a.value == w[static_cast<std::size_t>(n)]);
        CHECK(a.b == b_seq(n));
        CHECK(a.c == c_seq(n));
        CHECK(a.value == pl(-a.c, a.b));
        CHECK(wilf_coeff_via_2f1(n) == a.value);
    }
}

TEST_CASE("2F1 special values")
{
    CHECK(gauss_2f1_special(0) == PiLinear::pi_times(q(1, 4)));
    CHECK(gauss_2f1_special(1) == pl(q(-3, 4), q(3, 8)));
    for (long n = 0; n <= 30; ++n) CHECK(gauss_2f1_special(n) == f21_oracle(n));
}

TEST_CASE("bell special values at the sqrt coefficients")
{
    const long xs_list[] = {1, 0, 1, 3, 16, 105};
    for (long n = 1; n <= 6; ++n) {
        CHECK(bell_sqrt_argument(n) == q(xs_list[n - 1]));
        CHECK(bell_sqrt_special(n, 1) == q(xs_list[n - 1]));
    }
    CHECK(bell_sqrt_special(3, 1) == q(1));
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k) {
            std::vector<Rational> xs;
            for (long i = 1; i <= n - k + 1; ++i) xs.push_back(qs(kFactD[i]));
            CHECK(bell_sqrt_special(n, k) == comb::bell_partial_bruteforce(n, k, xs));
        }
}

TEST_CASE("determinant relations")
{
    CHECK(b_via_determinant(1) == q(1, 4));
    CHECK(d_via_determinant(3) == q(1, 6));
    auto [d5, e4] = d_e_determinants(4);
    CHECK(d5 == q(16, 120));
    CHECK(e4 == q(-10, 24));

    for (long n = 1; n <= 12; ++n) {
        CHECK(b_via_determinant(n) == b_seq(n));
        CHECK(d_via_determinant(n) == d_seq(n));
        auto [dn1, en] = d_e_determinants(n);
        CHECK(dn1 == d_seq(n + 1));
        CHECK(en == e_seq(n));

        // the four matrices exactly as printed, with their prefactors
        auto mb = banded([](long k) { return d_seq(k); }, n);
        CHECK(series::determinant(mb) / q(4) == b_seq(n));
        auto md = banded([](long k) { return b_seq(k); }, n);
        CHECK(q((n - 1) % 2 ? -1 : 1) * pow(q(4), n) * series::determinant(md) == d_seq(n));
        auto m1 = banded([](long k) { return e_seq(k); }, n);
        CHECK(q(n % 2 ? -1 : 1) / q(n + 1) * series::determinant(m1) == d_seq(n + 1));
        auto m2 = banded([](long k) { return q(k + 1) * d_seq(k + 1); }, n);
        CHECK(q(n % 2 ? -1 : 1) * series::determinant(m2) == e_seq(n));
    }
}

TEST_CASE("pi approximations")
{
    CHECK(pi_approx(0) == q(0));
    CHECK(pi_approx(1) == q(2));
    CHECK(pi_approx(11) == qs("719718067/79833600") / qs("447448/155925"));
}

TEST_CASE("integrality and positivity prefixes")
{
    BigInt prev_u = 0, prev2_u = 0;
    for (long n = 0; n <= 60; ++n) {
        Rational u = q(4) * Rational(factorial(n)) * b_seq(n);
        CHECK(u.is_integer());
        CHECK(u.sign() > 0);
        CHECK((Rational(factorial(n)) * d_seq(n)).is_integer());
        CHECK((Rational(factorial(n)) * e_seq(n)).is_integer());
        if (n >= 1) {
            CHECK((q(2) * Rational(factorial(n)) * c_seq(n)).is_integer());
            CHECK(d_seq(n).sign() >= 0);
            CHECK(u.numerator() >= prev_u);
        }
        if (n >= 2) CHECK(prev_u * prev_u <= prev2_u * u.numerator());
        prev2_u = prev_u;
        prev_u = u.numerator();
    }
}

TEST_CASE("log-convex companion")
{
    for (long n = 1; n <= 60; ++n) {
        BigInt v = log_convex_companion(n);
        // (-1)^n sum_k (-1)^k S(n,k) (2k-2)!!
        Rational direct;
        for (long k = 1; k <= n; ++k)
            direct += q(k % 2 ? -1 : 1) * Rational(comb::stirling2(n, k)) * double_factorial(2 * k - 2);
        CHECK(Rational(v) == q(n % 2 ? -1 : 1) * direct);
        CHECK(v > 0);
        if (n >= 2) CHECK(v >= log_convex_companion(n - 1));
        if (n >= 3) CHECK(log_convex_companion(n - 1) * log_convex_companion(n - 1) <= log_convex_companion(n - 2) * v);
    }
}

TEST_CASE("kernel identities")
{
    for (long n = 0; n <= 30; ++n) {
        CHECK(kernel_sum_identity(n).holds());
        CHECK(kernel_t_identity(n).holds());
        CHECK(kernel_t_closed_identity(n).holds());
    }
}
