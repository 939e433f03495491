#include "critcode/bounds.hpp"

#include <algorithm>

#include "critcode/errors.hpp"

namespace critcode {

namespace {

void check_profile_invariants(const CriticalProfile& p) {
    for (int i = 1; i < p.n; ++i)
        if (p.critical[static_cast<std::size_t>(i)] < p.critical[static_cast<std::size_t>(i) - 1])
            throw std::logic_error("critical exponents must be nondecreasing");
    for (int i = 1; i <= p.k; ++i)
        if (p.critical[static_cast<std::size_t>(i) - 1] != 1)
            throw std::logic_error("critical exponent below the dimension must be 1");
    for (int i = 1; i <= p.n; ++i)
        if (p.critical[static_cast<std::size_t>(i) - 1] > p.k)
            throw std::logic_error("critical exponent above the dimension");
    for (int i = 1; i < p.n - p.k; ++i)
        if (p.dual_defects[static_cast<std::size_t>(i)] > p.dual_defects[static_cast<std::size_t>(i) - 1])
            throw std::logic_error("dual Singleton defects must be nonincreasing");
    for (int t : p.deficit)
        if (t < 0) throw std::logic_error("negative bound deficit falsifies the main bound");
}

}  // namespace

CriticalProfile critical_profile(const LinearCode& c, const Caps& caps) {
    if (!c.nondegenerate()) throw DegenerateCode("profile needs a nondegenerate code");
    CriticalProfile p;
    p.n = c.length();
    p.k = c.dimension();
    p.q = c.q();
    p.hierarchy = weight_hierarchy(c, caps);
    if (p.k < p.n) p.dual_hierarchy = wei_dual_hierarchy(p.hierarchy, p.n);
    p.dual_defects = singleton_defects(c, caps);
    p.critical = critical_exponents_poly(c, caps);
    p.bound.reserve(static_cast<std::size_t>(p.n - p.k));
    p.deficit.reserve(static_cast<std::size_t>(p.n - p.k));
    for (int i = p.k + 1; i <= p.n; ++i) {
        const int b = p.dual_defects[static_cast<std::size_t>(p.n - i)] + 2;  // s_{n+1-i} + 2
        p.bound.push_back(b);
        p.deficit.push_back(b - p.critical[static_cast<std::size_t>(i) - 1]);
    }
    p.d_max = max_weight(c, caps);
    check_profile_invariants(p);
    return p;
}

std::vector<int> general_kung_bound(const LinearCode& c, const Caps& caps) {
    if (c.dimension() == c.length()) throw DomainError("bound needs k < n");
    return critical_profile(c, caps).bound;
}

std::vector<int> sharpness_deficits(const LinearCode& c, const Caps& caps) {
    if (c.dimension() == c.length()) throw DomainError("deficits need k < n");
    return critical_profile(c, caps).deficit;
}

int kung_bound(const LinearCode& c, const Caps& caps) {
    if (c.dimension() == c.length()) throw DomainError("bound needs k < n");
    const CriticalProfile p = critical_profile(c, caps);
    const int value = p.k - p.dual_hierarchy[0] + 3;
    if (value != p.bound.back())
        throw std::logic_error("k - d + 3 must match the general bound at i = n");
    return value;
}

bool is_r_mds(const LinearCode& c, int r, const Caps& caps) {
    if (r < 1 || r > c.dimension()) throw DomainError("subcode dimension out of range");
    const auto d = weight_hierarchy(c, caps);
    return d[static_cast<std::size_t>(r) - 1] == c.length() - c.dimension() + r;
}

std::vector<Certification> sharpness_predicates(const LinearCode& c, const Caps& caps) {
    return analyze_code(c, caps).certifications;
}

RefinedCheck refined_bound_check(const LinearCode& c, const Caps& caps) {
    RefinedCheck out;
    if (c.dimension() == c.length() || !c.nondegenerate()) return out;
    const CriticalProfile p = critical_profile(c, caps);
    out.applicable = (p.q % 2 == 1) && (p.dual_hierarchy[0] > 3);
    if (out.applicable)
        out.holds = p.critical[static_cast<std::size_t>(p.n) - 1] <= p.k - p.dual_hierarchy[0] + 2;
    return out;
}

int simplex_deficit_formula(long q, int k, long i) {
    if (q < 2 || k < 1) throw DomainError("bad simplex parameters");
    const BigInt bq(q);
    const BigInt n = mu(bq, k);
    if (BigInt(i) <= k || BigInt(i) > n) throw DomainError("index outside [k+1, mu_k]");
    for (int r = 1; r <= k; ++r) {
        const BigInt lo = n - mu(bq, k - r + 1);  // exclusive
        const BigInt hi = n - mu(bq, k - r);      // inclusive
        if (BigInt(i) > lo && BigInt(i) <= hi) {
            const BigInt l = BigInt(i) - lo;
            return l <= k - r + 1 ? 0 : 1;
        }
    }
    throw std::logic_error("index not covered by the deficit ranges");
}

BoundReport analyze_code(const LinearCode& c, const Caps& caps) {
    BoundReport r;
    r.profile = critical_profile(c, caps);
    const CriticalProfile& p = r.profile;
    if (p.k < p.n) {
        r.kung = p.k - p.dual_hierarchy[0] + 3;
        if (*r.kung != p.bound.back())
            throw std::logic_error("k - d + 3 must match the general bound at i = n");
        for (int i = p.k + 1; i <= p.n; ++i)
            if (p.deficit[static_cast<std::size_t>(i - p.k) - 1] == 0) r.sharp.push_back(i);
        // sufficient conditions; each one is re-verified against the profile
        for (int i = p.k + 1; i <= p.n; ++i)
            if (p.dual_defects[static_cast<std::size_t>(p.n - i)] == 0 && p.d_max < i)
                r.certifications.push_back({i, "dual-mds"});
        if (p.dual_defects[0] == 0 && p.d_max < p.n) r.certifications.push_back({p.n, "mds"});
        const int d = p.hierarchy[0];
        const int kd_index = p.k + d - 1;
        if (d >= 2 && kd_index <= p.n && p.d_max < kd_index)
            r.certifications.push_back({kd_index, "k+d-1"});
        std::sort(r.certifications.begin(), r.certifications.end(),
                  [](const Certification& a, const Certification& b) {
                      return a.index != b.index ? a.index < b.index : a.predicate < b.predicate;
                  });
        for (const auto& cert : r.certifications) {
            const bool ok =
                p.deficit[static_cast<std::size_t>(cert.index - p.k) - 1] == 0 &&
                p.critical[static_cast<std::size_t>(cert.index) - 1] == 2;
            if (!ok) throw std::logic_error("certified index fails the profile check");
        }
        r.refined.applicable = (p.q % 2 == 1) && (p.dual_hierarchy[0] > 3);
        if (r.refined.applicable)
            r.refined.holds =
                p.critical[static_cast<std::size_t>(p.n) - 1] <= p.k - p.dual_hierarchy[0] + 2;
    }
    return r;
}

}  // namespace critcode
