#pragma once

#include <cstdint>

namespace critcode {

/// Enumeration budgets. Everything in this library is exact and exponential
/// somewhere; these caps keep every entry point desk-scale unless the caller
/// opts into more.
struct Caps {
    int max_n = 24;                              // subset sweeps cost 2^n
    std::uint64_t max_enum = 1ull << 24;         // codeword / tuple enumerations
    std::uint64_t max_subspaces = 1ull << 22;    // subspace enumerations
};

}  // namespace critcode
