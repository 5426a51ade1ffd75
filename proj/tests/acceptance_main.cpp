#include <cstdlib>
#include <iostream>
#include <string>

#include "wilf/acceptance.hpp"

// One line per acceptance criterion; nonzero exit if any fails.
int main(int argc, char** argv)
{
    wilf::acceptance::Options opt;
    if (argc > 1) opt.digits = std::atoi(argv[1]);
    int failed = 0;
    for (const auto& r : wilf::acceptance::run_all(opt)) {
        std::cout << wilf::acceptance::format_line(r) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
