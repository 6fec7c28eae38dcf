#pragma once

#include <stdexcept>
#include <string>

namespace edges {

// Violated precondition on user-supplied parameters (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical self-check failed (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw PreconditionError(message);
    }
}

}  // namespace edges
