#pragma once

#include <stdexcept>
#include <string>

namespace lqn {

struct NotAPrimePower : std::invalid_argument {
    explicit NotAPrimePower(unsigned long q)
        : std::invalid_argument(std::to_string(q) + " is not a prime power") {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("inverse of zero") {}
};

struct SamePoint : std::invalid_argument {
    SamePoint() : std::invalid_argument("slope of a point with itself") {}
};

struct StaleFailure : std::logic_error {
    StaleFailure() : std::logic_error("failure record no longer current") {}
};

struct ShapeMismatch : std::invalid_argument {
    ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by the representation-file reader; line is 1-based, 0 = whole file.
struct ParseError : std::runtime_error {
    ParseError(unsigned long line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    unsigned long line;
};

}  // namespace lqn
