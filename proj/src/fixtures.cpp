#include "wilf/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "wilf/errors.hpp"

#ifndef WILF_FIXTURE_DIR
#define WILF_FIXTURE_DIR "data/fixtures"
#endif

namespace wilf::fixtures {

Fixture load_fixture(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read fixture " + file.string());
    Fixture f;
    f.name = file.stem().string();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::int64_t n = 0;
        std::string value, extra;
        if (!(ls >> n >> value) || (ls >> extra))
            throw UsageError(file.string() + ":" + std::to_string(lineno) + ": expected 'index value'");
        f.values.emplace_back(n, Rational::parse(value));
    }
    if (f.values.empty()) throw UsageError("fixture " + file.string() + " holds no values");
    return f;
}

ReferenceData load_reference(const std::filesystem::path& dir)
{
    return {load_fixture(dir / "table1_b.txt"), load_fixture(dir / "table1_c.txt"), load_fixture(dir / "t_values.txt"),
            load_fixture(dir / "d_factorial.txt"), load_fixture(dir / "e_factorial.txt")};
}

std::filesystem::path default_fixture_dir() { return WILF_FIXTURE_DIR; }

} // namespace wilf::fixtures
