#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critcode/invariants.hpp"

namespace critcode {

/// Everything the reports carry for one code. `bound` and `deficit` cover
/// i = k+1..n; `critical` and `dual_defects` cover i = 1..n (defects use the
/// -1 convention past n-k so bound[i] = dual_defects[n+1-i] + 2 uniformly).
struct CriticalProfile {
    int n = 0;
    int k = 0;
    long q = 0;
    std::vector<int> hierarchy;       // d_1..d_k
    std::vector<int> dual_hierarchy;  // d_1..d_{n-k} of the dual
    std::vector<int> dual_defects;    // s_1..s_n
    std::vector<int> critical;        // c_1..c_n
    std::vector<int> bound;           // i = k+1..n
    std::vector<int> deficit;         // t_i = bound_i - c_i, i = k+1..n
    long d_max = 0;

    bool operator==(const CriticalProfile&) const = default;
};

struct Certification {
    int index = 0;
    std::string predicate;  // "dual-mds" | "mds" | "k+d-1"
    bool operator==(const Certification&) const = default;
};

/// A strictly stronger bound, c_n <= k - d_1(dual) + 2, that is known to hold
/// for q odd with dual minimum distance > 3 (simplex codes show why those
/// hypotheses matter). Reported, never assumed.
struct RefinedCheck {
    bool applicable = false;
    bool holds = false;
    bool operator==(const RefinedCheck&) const = default;
};

struct BoundReport {
    CriticalProfile profile;
    std::optional<int> kung;         // k - d_1(dual) + 3; empty when k = n
    std::vector<int> sharp;          // i in [k+1, n] with deficit 0
    std::vector<Certification> certifications;
    RefinedCheck refined;

    bool operator==(const BoundReport&) const = default;
};

/// s_{n+1-i} + 2 for i = k+1..n. Nondegenerate code with k < n.
std::vector<int> general_kung_bound(const LinearCode& c, const Caps& caps = {});

/// t_i = bound_i - c_i for i = k+1..n. A negative entry is a logic error and
/// aborts the computation.
std::vector<int> sharpness_deficits(const LinearCode& c, const Caps& caps = {});

/// k - d_1(dual) + 3 (the i = n case of the general bound).
int kung_bound(const LinearCode& c, const Caps& caps = {});

/// d_r = n - k + r.
bool is_r_mds(const LinearCode& c, int r, const Caps& caps = {});

/// All indices in [k+1, n] certified sharp by the sufficient conditions:
/// "dual-mds" - the dual is (n+1-i)-MDS and d_max < i;
/// "mds"      - the code is MDS and d_max < n (certifies i = n);
/// "k+d-1"    - d_max < k + d - 1 (certifies i = k + d - 1).
/// Each certified index is re-verified against the computed profile
/// (deficit 0, critical exponent 2).
std::vector<Certification> sharpness_predicates(const LinearCode& c, const Caps& caps = {});

RefinedCheck refined_bound_check(const LinearCode& c, const Caps& caps = {});

/// Closed-form deficit of the [mu_k, k] simplex code over GF(q) at index i in
/// [k+1, mu_k]: write i = mu_k - mu_{k-r+1} + l with l in [1, q^(k-r)]; the
/// deficit is 0 for l <= k-r+1 and 1 otherwise.
int simplex_deficit_formula(long q, int k, long i);

CriticalProfile critical_profile(const LinearCode& c, const Caps& caps = {});
BoundReport analyze_code(const LinearCode& c, const Caps& caps = {});

}  // namespace critcode
