#include "wilf/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "wilf/combinatorics.hpp"
#include "wilf/factorials.hpp"
#include "wilf/fixtures.hpp"
#include "wilf/numeric_oracle.hpp"
#include "wilf/sequences.hpp"
#include "wilf/verify.hpp"

namespace wilf::acceptance {

namespace {

// Pinned tolerances and ranges.
constexpr double kTable1Seconds = 1.0;
constexpr double kSelftestSeconds = 300.0;
constexpr int kHypMaxN = 10;
constexpr const char* kHypTolerance = "1e-30";
constexpr int kSeriesTerms = 40; // sum_{n<=40}
constexpr const char* kWilfTolerance = "1e-18";
constexpr const char* kSamplePoints[] = {"0.2", "-0.2", "0.4", "-0.4"};
constexpr const char* kPiGap60Bound = "0.06";
constexpr const char* kTrendLow = "0.8";
constexpr const char* kTrendHigh = "1.2";
constexpr std::int64_t kTrendN = 300, kTrendEarly = 150, kTrendLate = 600;

using Clock = std::chrono::steady_clock;
using numeric::Real;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

CriterionResult timed(int id, std::string name, const std::function<std::pair<bool, std::string>()>& body)
{
    auto t0 = Clock::now();
    CriterionResult r{id, std::move(name), false, "", 0};
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = std::move(detail);
    r.seconds = since(t0);
    return r;
}

// Compares reference pairs (n, value) against f(n); first mismatch wins.
std::pair<bool, std::string> match_fixture(const fixtures::Fixture& fx, const std::string& label,
                                           const std::function<Rational(std::int64_t)>& f, std::size_t expected)
{
    if (fx.values.size() != expected)
        return {false, label + ": fixture has " + std::to_string(fx.values.size()) + " values, expected " + std::to_string(expected)};
    for (const auto& [n, ref] : fx.values) {
        Rational got = f(n);
        if (got != ref) return {false, label + "_" + std::to_string(n) + ": computed " + got.str() + ", reference " + ref.str()};
    }
    return {true, ""};
}

std::pair<bool, std::string> suites_pass(std::initializer_list<const char*> names)
{
    std::size_t checks = 0;
    for (const char* s : names) {
        for (const auto& c : verify::run_suite(s)) {
            if (c.advisory) continue;
            ++checks;
            if (!c.pass) return {false, std::string(s) + ": " + c.name + " [" + c.range + "] " + c.counterexample};
        }
    }
    return {true, std::to_string(checks) + " identity sweeps hold exactly"};
}

CriterionResult criterion7(int digits)
{
    return timed(7, "2F1 special values vs Pfaff numeric", [digits]() -> std::pair<bool, std::string> {
        if (seq::gauss_2f1_special(0) != PiLinear::pi_times(Rational(BigInt(1), BigInt(4))))
            return {false, "n=0 is not exactly pi/4: " + to_string(seq::gauss_2f1_special(0))};
        const mpfr_prec_t bits = numeric::digits_to_bits(digits);
        const Real tol = Real::parse(kHypTolerance, bits);
        Real worst(bits);
        for (int n = 0; n <= kHypMaxN; ++n) {
            Real err = abs(numeric::hyp2f1_at_minus1(n, digits) - numeric::to_real(seq::gauss_2f1_special(n), bits + 64));
            if (!(err < tol)) return {false, "n=" + std::to_string(n) + ": |diff| = " + err.to_decimal(6)};
            worst = numeric::max(worst, err);
        }
        return {true, "n<=10, max |diff| = " + worst.to_decimal(3) + " < " + kHypTolerance + "; n=0 is pi/4 exactly"};
    });
}

CriterionResult criterion8(int digits)
{
    return timed(8, "function vs truncated series", [digits]() -> std::pair<bool, std::string> {
        const mpfr_prec_t bits = numeric::digits_to_bits(digits);
        std::vector<PiLinear> a;
        std::vector<Rational> c;
        for (int n = 0; n <= kSeriesTerms; ++n) {
            a.push_back(seq::a_coeff(n).value);
            c.push_back(seq::c_seq(n));
        }
        const Real ln2 = Real::ln2(bits);
        // measured constant K = max c_n ln2^n over the summed prefix
        Real K(bits);
        for (int n = 0; n <= kSeriesTerms; ++n) K = numeric::max(K, Real(c[n], bits) * pow(ln2, n));
        const Real wtol = Real::parse(kWilfTolerance, bits);
        const Real rounding = ldexp(Real(1L, bits), -static_cast<long>(bits) + 24);
        std::ostringstream detail;
        bool ok = true;
        for (const char* xs : kSamplePoints) {
            Real x = Real::parse(xs, bits);
            Real werr = abs(numeric::eval_wilf(x) - numeric::eval_polynomial(a, x));
            Real cerr = abs(numeric::eval_c_generating(x) - numeric::eval_polynomial(c, x));
            Real cbound = numeric::geometric_tail(K, abs(x) / ln2, kSeriesTerms) + rounding;
            // pi G(x) - W(x) reproduces the c generating function
            Real gid = abs(Real::pi(bits) * numeric::eval_b_generating(x) - numeric::eval_wilf(x) - numeric::eval_c_generating(x));
            bool pw = werr < wtol, pc = cerr <= cbound, pg = gid <= rounding;
            ok = ok && pw && pc && pg;
            if (xs != kSamplePoints[0]) detail << "; ";
            detail << "x=" << xs << ": W " << werr.to_decimal(2) << (pw ? "" : " FAIL") << ", C " << cerr.to_decimal(2) << "<="
                   << cbound.to_decimal(2) << (pc ? "" : " FAIL") << (pg ? "" : ", piG-W!=C");
        }
        return {ok, detail.str()};
    });
}

CriterionResult criterion10(int digits)
{
    return timed(10, "pi approximation and asymptotic trends", [digits]() -> std::pair<bool, std::string> {
        const mpfr_prec_t bits = numeric::digits_to_bits(digits);
        Real g60 = numeric::pi_gap(60, digits), g120 = numeric::pi_gap(120, digits);
        std::ostringstream d;
        bool ok = true;
        bool p1 = g60 < Real::parse(kPiGap60Bound, bits);
        bool p2 = g120 < g60;
        d << "gap60 " << g60.to_decimal(4) << (p1 ? " < " : " >= ") << kPiGap60Bound << ", gap120 " << g120.to_decimal(4)
          << (p2 ? " < gap60" : " >= gap60");
        ok = p1 && p2;
        const Real one(1L, bits), lo = Real::parse(kTrendLow, bits), hi = Real::parse(kTrendHigh, bits);
        for (char s : {'b', 'c'}) {
            Real r300 = numeric::asymptotic_trend(s, kTrendN, digits);
            Real r150 = numeric::asymptotic_trend(s, kTrendEarly, digits);
            Real r600 = numeric::asymptotic_trend(s, kTrendLate, digits);
            bool in = lo <= r300 && r300 <= hi;
            bool closer = abs(r600 - one) < abs(r150 - one);
            ok = ok && in && closer;
            d << "; " << s << ": ratio(300) " << r300.to_decimal(10) << (in ? "" : std::string(" outside [") + kTrendLow + "," + kTrendHigh + "]") << ", ratio(150) "
              << r150.to_decimal(10) << ", ratio(600) " << r600.to_decimal(10) << (closer ? "" : " not closer to 1");
        }
        return {ok, d.str()};
    });
}

} // namespace

std::vector<CriterionResult> run_numeric(int digits) { return {criterion7(digits), criterion8(digits), criterion10(digits)}; }

std::vector<CriterionResult> run_all(const Options& opt)
{
    const auto t_start = Clock::now();
    const auto ref = fixtures::load_reference(opt.fixtures.empty() ? fixtures::default_fixture_dir() : opt.fixtures);
    std::vector<CriterionResult> out;

    out.push_back(timed(1, "Table-1 reproduction", [&]() -> std::pair<bool, std::string> {
        auto t0 = Clock::now();
        auto b = match_fixture(ref.table1_b, "b", seq::b_seq, 12);
        if (!b.first) return b;
        auto c = match_fixture(ref.table1_c, "c", seq::c_seq, 12);
        if (!c.first) return c;
        double s = since(t0);
        if (s >= kTable1Seconds) return {false, "24 values equal but took " + fmt_seconds(s)};
        return {true, "24/24 rationals equal in " + fmt_seconds(s)};
    }));

    out.push_back(timed(2, "T(n) reproduction", [&]() -> std::pair<bool, std::string> {
        auto t = match_fixture(ref.t_values, "T", seq::t_seq, 11);
        if (!t.first) return t;
        for (std::int64_t m = 1; m <= 15; ++m)
            if (seq::t_seq(4 * m - 1) != seq::t_seq(4 * m)) return {false, "T(4m-1) != T(4m) at m=" + std::to_string(m)};
        return {true, "T(0..10) equal; T(4m-1) = T(4m) for m <= 15"};
    }));

    out.push_back(timed(3, "n!d_n and n!e_n reproduction", [&]() -> std::pair<bool, std::string> {
        auto fd = [](std::int64_t n) { return Rational(factorial(n)) * seq::d_seq(n); };
        auto fe = [](std::int64_t n) { return Rational(factorial(n)) * seq::e_seq(n); };
        auto d = match_fixture(ref.d_factorial, "n!d", fd, 22);
        if (!d.first) return d;
        auto e = match_fixture(ref.e_factorial, "n!e", fe, 22);
        if (!e.first) return e;
        return {true, "44/44 integers equal"};
    }));

    out.push_back(timed(4, "identity suites", [] { return suites_pass({"lemma1", "lemma2", "kernel", "inversion"}); }));
    out.push_back(timed(5, "Bell closed forms vs partition sums", [] { return suites_pass({"bell"}); }));
    out.push_back(timed(6, "pipeline and determinant equivalence", [] { return suites_pass({"pipeline", "determinants"}); }));
    out.push_back(criterion7(opt.digits));
    out.push_back(criterion8(opt.digits));
    out.push_back(timed(9, "prefix properties", [] { return suites_pass({"prefix-properties"}); }));
    out.push_back(criterion10(opt.digits));

    out.push_back(timed(11, "runtime and precision stability", [&]() -> std::pair<bool, std::string> {
        auto rerun = run_numeric(2 * opt.digits);
        std::string changed;
        for (const auto& r : rerun)
            for (const auto& o : out)
                if (o.id == r.id && o.pass != r.pass) changed += " C" + std::to_string(r.id);
        double total = since(t_start);
        bool fast = total < kSelftestSeconds;
        std::string d = "total " + fmt_seconds(total) + (fast ? " < 300 s" : " >= 300 s") + "; digits " +
                        std::to_string(opt.digits) + " -> " + std::to_string(2 * opt.digits) + ": ";
        d += changed.empty() ? "verdicts unchanged" : "verdict changed for" + changed;
        return {fast && changed.empty(), d};
    }));
    return out;
}

std::string format_line(const CriterionResult& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + " C" + std::to_string(r.id) + " " + r.name + " (" + fmt_seconds(r.seconds) +
           "): " + r.detail;
}

} // namespace wilf::acceptance
