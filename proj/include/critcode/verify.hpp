#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "critcode/caps.hpp"

namespace critcode {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // includes the offending code's matrix on failure
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int random_codes = 25;  // budget for the randomized suites
    Caps caps;
};

/// Suites: "tables" (reference values for the built-in families; alias
/// "paper-tables"), "oracles" (brute-force counting agreements), "bounds"
/// (deficit nonnegativity and three-method agreement on random codes),
/// "families" (constructor closed forms), "all".
std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opt);

bool known_suite(const std::string& suite);

}  // namespace critcode
