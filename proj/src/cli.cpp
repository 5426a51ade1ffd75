#include "wilf/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilf/acceptance.hpp"
#include "wilf/errors.hpp"
#include "wilf/numeric_oracle.hpp"
#include "wilf/pipelines.hpp"
#include "wilf/sequences.hpp"
#include "wilf/serialization.hpp"
#include "wilf/verify.hpp"

namespace wilf::cli {

namespace {

constexpr std::int64_t kMaxIndex = 2000;  // seq and pi
constexpr std::int64_t kMaxOrder = 400;   // series
constexpr std::int64_t kMaxWilfOrder = 150; // the composed W series is cubic in the order
constexpr int kMaxDigits = 10000;

const std::vector<std::string> kSeqNames{"a", "b", "c", "d", "e", "T", "pi-approx", "2f1"};
const std::vector<std::string> kSeriesNames{"wilf", "b", "c", "sqrt", "e", "recip-e"};

struct Request {
    std::string format = "json";
    std::optional<std::string> positional_format;
    int digits = 50;
    std::string out_path;
    std::string fixtures;

    std::string name;
    std::int64_t lo = 0, hi = 0;
    std::optional<std::int64_t> hi_opt;
    std::optional<std::int64_t> bound;
};

io::Format format_of(const Request& r) { return io::parse_format(r.positional_format.value_or(r.format)); }

void check_range(std::int64_t lo, std::int64_t hi, std::int64_t cap)
{
    if (lo < 0 || hi < 0) throw UsageError("range bounds must be nonnegative");
    if (lo > hi) throw UsageError("lower bound exceeds upper bound");
    if (hi > cap) throw UsageError("upper bound above the cap of " + std::to_string(cap));
}

void check_name(const std::string& name, const std::vector<std::string>& known, const char* what)
{
    for (const auto& k : known)
        if (k == name) return;
    std::string list;
    for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
    throw UsageError(std::string("unknown ") + what + " '" + name + "' (" + list + ")");
}

std::string run_seq(const Request& r)
{
    check_name(r.name, kSeqNames, "sequence");
    check_range(r.lo, r.hi, kMaxIndex);
    const io::Format f = format_of(r);
    if (r.name == "a" || r.name == "2f1") {
        std::vector<io::Entry<PiLinear>> rows;
        for (std::int64_t n = r.lo; n <= r.hi; ++n)
            rows.push_back({n, r.name == "a" ? seq::a_coeff(n).value : seq::gauss_2f1_special(n)});
        return io::render(rows, f);
    }
    Rational (*fn)(std::int64_t) = nullptr;
    if (r.name == "b") fn = seq::b_seq;
    else if (r.name == "c") fn = seq::c_seq;
    else if (r.name == "d") fn = seq::d_seq;
    else if (r.name == "e") fn = seq::e_seq;
    else if (r.name == "T") fn = seq::t_seq;
    else fn = seq::pi_approx;
    std::vector<io::Entry<Rational>> rows;
    for (std::int64_t n = r.lo; n <= r.hi; ++n) rows.push_back({n, fn(n)});
    return io::render(rows, f);
}

std::string run_pi(const Request& r)
{
    check_range(r.lo, r.hi, kMaxIndex);
    const io::Format f = format_of(r);
    const mpfr_prec_t bits = numeric::digits_to_bits(r.digits);
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream text;
    if (f == io::Format::csv) text << "n,numerator,denominator,decimal,gap\n";
    for (std::int64_t n = r.lo; n <= r.hi; ++n) {
        Rational q = seq::pi_approx(n);
        std::string dec = numeric::Real(q, bits).to_decimal(r.digits);
        std::string gap = numeric::pi_gap(n, r.digits).to_decimal(r.digits);
        switch (f) {
        case io::Format::json: arr.push_back({{"n", n}, {"ratio", q.str()}, {"decimal", dec}, {"gap", gap}}); break;
        case io::Format::csv:
            text << n << "," << to_string(q.numerator()) << "," << to_string(q.denominator()) << "," << dec << "," << gap << "\n";
            break;
        case io::Format::plain: text << n << " " << q << " " << dec << " " << gap << "\n"; break;
        }
    }
    return f == io::Format::json ? arr.dump() + "\n" : text.str();
}

std::string run_series(const Request& r)
{
    check_name(r.name, kSeriesNames, "series");
    check_range(0, r.lo, r.name == "wilf" || r.name == "c" ? kMaxWilfOrder : kMaxOrder);
    const auto N = static_cast<std::size_t>(r.lo);
    const io::Format f = format_of(r);
    if (r.name == "wilf") return io::render_series(pipeline::wilf_series(N), f);
    if (r.name == "c") return io::render_series(pipeline::c_generating(N), f);
    if (r.name == "b") return io::render_series(pipeline::b_generating(N), f);
    if (r.name == "sqrt") return io::render_series(pipeline::sqrt_series(N), f);
    if (r.name == "e") return io::render_series(pipeline::e_series(N), f);
    return io::render_series(pipeline::recip_e_series(N), f);
}

std::pair<int, std::string> run_verify(const Request& r)
{
    auto results = verify::run_suite(r.name, r.bound);
    const io::Format f = format_of(r);
    std::ostringstream text;
    nlohmann::json arr = nlohmann::json::array();
    const verify::CheckResult* first_failure = nullptr;
    for (const auto& c : results) {
        if (!c.pass && !c.advisory && !first_failure) first_failure = &c;
        std::string verdict = c.pass ? "PASS" : (c.advisory ? "FAIL (advisory)" : "FAIL");
        switch (f) {
        case io::Format::json:
            arr.push_back({{"name", c.name}, {"range", c.range}, {"pass", c.pass}, {"advisory", c.advisory},
                           {"counterexample", c.counterexample}});
            break;
        case io::Format::csv:
            if (&c == &results.front()) text << "name,range,verdict,counterexample\n";
            text << '"' << c.name << "\",\"" << c.range << "\"," << verdict << ",\"" << c.counterexample << "\"\n";
            break;
        case io::Format::plain:
            text << verdict << "  " << c.name << "  [" << c.range << "]";
            if (!c.pass) text << "  " << c.counterexample;
            text << "\n";
            break;
        }
    }
    std::string body = f == io::Format::json ? arr.dump(2) + "\n" : text.str();
    if (first_failure) body += "first counterexample: " + first_failure->name + ": " + first_failure->counterexample + "\n";
    return {first_failure ? kVerificationFailed : kOk, body};
}

std::pair<int, std::string> run_selftest(const Request& r)
{
    acceptance::Options opt;
    opt.digits = r.digits;
    opt.fixtures = r.fixtures;
    std::ostringstream text;
    std::string failed;
    for (const auto& c : acceptance::run_all(opt)) {
        text << acceptance::format_line(c) << "\n";
        if (!c.pass) failed += (failed.empty() ? "" : ", ") + std::string("C") + std::to_string(c.id) + " " + c.name;
    }
    if (!failed.empty()) text << "selftest failed: " << failed << "\n";
    return {failed.empty() ? kOk : kVerificationFailed, text.str()};
}

void emit(const Request& r, const std::string& body, std::ostream& out)
{
    if (r.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(r.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + r.out_path);
    file << body;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Request req;
    CLI::App app{"Exact Maclaurin coefficients of arctan(sqrt(2e^-z - 1))/sqrt(2e^-z - 1) and related sequences", "wilf"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.add_option("--format", req.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--digits", req.digits, "significant digits for numeric output")->check(CLI::Range(1, kMaxDigits));
    app.add_option("--out", req.out_path, "write to this file instead of stdout");
    app.add_option("--fixtures", req.fixtures, "directory of reference prefixes for selftest");
    app.add_option("--bound", req.bound, "bound for verify");

    auto* seq_cmd = app.add_subcommand("seq", "exact values of a sequence over lo..hi");
    seq_cmd->add_option("name", req.name, "a, b, c, d, e, T, pi-approx, 2f1")->required();
    seq_cmd->add_option("lo", req.lo)->required();
    seq_cmd->add_option("hi", req.hi)->required();
    seq_cmd->add_option("format", req.positional_format, "json, csv or plain");

    auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
    verify_cmd->add_option("suite", req.name, "lemma1, lemma2, kernel, bell, inversion, determinants, pipeline, prefix-properties, all")
        ->required();
    verify_cmd->add_option("bound", req.bound);

    auto* pi_cmd = app.add_subcommand("pi", "c_n/b_n against pi for n (or n..m)");
    pi_cmd->add_option("n", req.lo)->required();
    pi_cmd->add_option("m", req.hi_opt);
    pi_cmd->add_option("format", req.positional_format, "json, csv or plain");

    auto* series_cmd = app.add_subcommand("series", "truncated generating series from the series pipelines");
    series_cmd->add_option("name", req.name, "wilf, b, c, sqrt, e, recip-e")->required();
    series_cmd->add_option("order", req.lo)->required();
    series_cmd->add_option("format", req.positional_format, "json, csv or plain");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");

    // CLI11 wants argv-style input in reverse order
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (seq_cmd->parsed()) {
            emit(req, run_seq(req), out);
            return kOk;
        }
        if (pi_cmd->parsed()) {
            req.hi = req.hi_opt.value_or(req.lo);
            emit(req, run_pi(req), out);
            return kOk;
        }
        if (series_cmd->parsed()) {
            emit(req, run_series(req), out);
            return kOk;
        }
        if (verify_cmd->parsed()) {
            auto [code, body] = run_verify(req);
            emit(req, body, out);
            if (code != kOk) err << "verification failed\n";
            return code;
        }
        if (selftest_cmd->parsed()) {
            auto [code, body] = run_selftest(req);
            emit(req, body, out);
            if (code != kOk) err << body.substr(body.rfind("selftest failed"));
            return code;
        }
    } catch (const UsageError& e) {
        err << "wilf: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "wilf: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace wilf::cli
