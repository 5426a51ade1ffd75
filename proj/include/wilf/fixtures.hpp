#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "wilf/rational.hpp"

namespace wilf::fixtures {

// Reference prefix read from a text file: "# ..." comments, then
// "index value" lines with the value as an exact rational.
struct Fixture {
    std::string name;
    std::vector<std::pair<std::int64_t, Rational>> values;
};

Fixture load_fixture(const std::filesystem::path& file); // UsageError when unreadable or malformed

struct ReferenceData {
    Fixture table1_b;    // b_n, n <= 11
    Fixture table1_c;    // c_n, n <= 11
    Fixture t_values;    // T(n), n <= 10
    Fixture d_factorial; // n! d_n, n <= 21
    Fixture e_factorial; // n! e_n, n <= 21
};

ReferenceData load_reference(const std::filesystem::path& dir);
std::filesystem::path default_fixture_dir();

} // namespace wilf::fixtures
