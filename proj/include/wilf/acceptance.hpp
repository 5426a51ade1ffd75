#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace wilf::acceptance {

struct Options {
    int digits = 50;
    std::filesystem::path fixtures; // empty -> built-in fixture directory
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Criteria 1..11 in order. Criterion 11 times the whole run and repeats the
// numeric criteria (7, 8, 10) at twice the digits, comparing verdicts.
std::vector<CriterionResult> run_all(const Options& opt);

// Only the precision-dependent criteria 7, 8, 10.
std::vector<CriterionResult> run_numeric(int digits);

std::string format_line(const CriterionResult& r);

} // namespace wilf::acceptance
