#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gen.hpp"
#include "wilf/errors.hpp"
#include "wilf/fixtures.hpp"
#include "wilf/formal_series.hpp"
#include "wilf/sequences.hpp"
#include "wilf/serialization.hpp"

using namespace wilf;
using nlohmann::json;

namespace {

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

std::filesystem::path temp_file(const std::string& name, const std::string& body)
{
    auto dir = std::filesystem::temp_directory_path() / "wilf_fixture_tests";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("format names")
{
    CHECK(io::parse_format("json") == io::Format::json);
    CHECK(io::parse_format("csv") == io::Format::csv);
    CHECK(io::parse_format("plain") == io::Format::plain);
    CHECK_THROWS_AS(io::parse_format("xml"), UsageError);
}

TEST_CASE("json round trips")
{
    CHECK(io::to_json(q(-3, 6)) == json("-1/2"));
    CHECK(io::to_json(q(4)) == json("4"));
    CHECK(io::to_json(PiLinear{q(0), q(1, 4)}) == json{{"rat", "0"}, {"pi", "1/4"}});
    gen::Lcg rng(61);
    for (int i = 0; i < 100; ++i) {
        PiLinear x{rng.small_rational(99, 50), rng.small_rational(99, 50)};
        CHECK(io::pi_linear_from_json(json::parse(io::to_json(x).dump())) == x);
        CHECK(io::rational_from_json(io::to_json(x.rat)) == x.rat);
    }
    CHECK_THROWS_AS(io::rational_from_json(json(3)), UsageError);
    CHECK_THROWS_AS(io::pi_linear_from_json(json{{"rat", "1"}}), UsageError);
}

TEST_CASE("sequence rendering")
{
    std::vector<io::Entry<Rational>> rows{{0, q(1, 4)}, {3, q(7, 24)}, {5, q(-2)}};
    auto j = json::parse(io::render(rows, io::Format::json));
    REQUIRE(j.is_array());
    CHECK(j[1]["n"] == 3);
    CHECK(j[1]["value"] == "7/24");
    CHECK(io::render(rows, io::Format::csv) == "n,numerator,denominator\n0,1,4\n3,7,24\n5,-2,1\n");
    CHECK(io::render(rows, io::Format::plain) == "0 1/4\n3 7/24\n5 -2\n");

    std::vector<io::Entry<PiLinear>> prow{{1, PiLinear{q(-1, 2), q(1, 4)}}};
    auto pj = json::parse(io::render(prow, io::Format::json));
    CHECK(pj[0]["value"]["rat"] == "-1/2");
    CHECK(pj[0]["value"]["pi"] == "1/4");
    CHECK(io::render(prow, io::Format::csv) == "n,rat_numerator,rat_denominator,pi_numerator,pi_denominator\n1,-1,2,1,4\n");

    // deterministic output
    CHECK(io::render(rows, io::Format::json) == io::render(rows, io::Format::json));
}

TEST_CASE("series rendering")
{
    series::RationalSeries s(std::vector<Rational>{q(1), q(-1), q(1, 2)});
    auto j = io::series_to_json(s);
    CHECK(j["order"] == 2);
    CHECK(j["ring"] == "rational");
    CHECK(j["coeffs"] == json{"1", "-1", "1/2"});

    series::PiSeries p(1);
    p[0] = PiLinear::pi_times(q(1, 4));
    auto pj = io::series_to_json(p);
    CHECK(pj["ring"] == "pi-linear");
    CHECK(pj["coeffs"][0]["pi"] == "1/4");
    CHECK(io::render_series(s, io::Format::plain) == "0 1\n1 -1\n2 1/2\n");
}

TEST_CASE("fixtures")
{
    auto ref = fixtures::load_reference(fixtures::default_fixture_dir());
    REQUIRE(ref.table1_b.values.size() == 12);
    REQUIRE(ref.table1_c.values.size() == 12);
    REQUIRE(ref.t_values.values.size() == 11);
    REQUIRE(ref.d_factorial.values.size() == 22);
    REQUIRE(ref.e_factorial.values.size() == 22);
    for (auto [n, v] : ref.table1_b.values) CHECK(seq::b_seq(n) == v);
    for (auto [n, v] : ref.table1_c.values) CHECK(seq::c_seq(n) == v);
    for (auto [n, v] : ref.t_values.values) CHECK(seq::t_seq(n) == v);

    auto ok = fixtures::load_fixture(temp_file("ok.txt", "# note\n\n0 1/2\n  # indented comment\n1 -3\n"));
    CHECK(ok.name == "ok");
    REQUIRE(ok.values.size() == 2);
    CHECK(ok.values[1].second == q(-3));

    CHECK_THROWS_AS(fixtures::load_fixture(temp_file("bad.txt", "0 1/2 extra\n")), UsageError);
    CHECK_THROWS_AS(fixtures::load_fixture(temp_file("junk.txt", "zero one\n")), UsageError);
    CHECK_THROWS_AS(fixtures::load_fixture(temp_file("empty.txt", "# nothing\n")), UsageError);
    CHECK_THROWS_AS(fixtures::load_fixture("/nonexistent/wilf.txt"), UsageError);
}
