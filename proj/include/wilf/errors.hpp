#pragma once

#include <stdexcept>
#include <string>

namespace wilf {

// Mathematical precondition violated (negative even double factorial,
// reciprocal of a series with zero constant term, pi^2 escape, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller misuse: bad argument shapes, unknown names, out-of-cap bounds.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace wilf
