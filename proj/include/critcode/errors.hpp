#pragma once

#include <stdexcept>

namespace critcode {

// error taxonomy mirrors the CLI exit codes: parse = 2, cap = 3, degenerate = 4
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateCode : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace critcode
