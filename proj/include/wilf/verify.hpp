#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wilf::verify {

struct CheckResult {
    std::string name;
    std::string range;
    bool pass = false;
    std::string counterexample; // first failure in exact form, empty on pass
    bool advisory = false;      // conjectures: reported, never fail a run
};

struct SuiteInfo {
    std::string name;
    std::int64_t default_bound;
    std::int64_t cap; // larger bounds are refused to keep runtime predictable
};

const std::vector<SuiteInfo>& suites();

// Runs one suite; "all" runs every suite at its default bound and takes no
// bound of its own. Unknown suites and bounds beyond the cap -> UsageError.
std::vector<CheckResult> run_suite(const std::string& suite, std::optional<std::int64_t> bound = std::nullopt);

// True when every non-advisory check passed.
bool all_pass(const std::vector<CheckResult>& results);

} // namespace wilf::verify
