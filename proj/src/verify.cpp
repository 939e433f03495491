#include "critcode/verify.hpp"

#include <sstream>

#include "critcode/bounds.hpp"
#include "critcode/errors.hpp"
#include "critcode/families.hpp"
#include "critcode/matroid.hpp"
#include "critcode/oracle.hpp"
#include "critcode/report.hpp"

namespace critcode {

namespace {

struct Runner {
    std::vector<VerifyResult> results;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        results.push_back({name, ok, ok ? "" : detail});
    }

    template <class Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }
};

std::string with_matrix(const LinearCode& c, const std::string& msg) {
    return msg + "\n" + code_to_file(c);
}

template <class T>
std::string seq(const std::vector<T>& v) {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? " " : "") << v[i];
    return o.str();
}

void suite_tables(Runner& r, const Caps& caps) {
    r.guarded("tables/simplex-2-4", [&] {
        const LinearCode c = simplex(2, 4);
        const BoundReport rep = analyze_code(c, caps);
        const std::vector<int> want_d = {8, 12, 14, 15};
        const std::vector<int> want_dd = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15};
        const std::vector<int> want_bound = {2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4};
        const std::vector<int> want_c_tail = {1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4};
        const std::vector<int> want_t = {1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0};
        std::vector<int> c_tail(rep.profile.critical.begin() + 4, rep.profile.critical.end());
        const bool ok = rep.profile.hierarchy == want_d && rep.profile.dual_hierarchy == want_dd &&
                        rep.profile.bound == want_bound && c_tail == want_c_tail &&
                        rep.profile.deficit == want_t && rep.kung == 4;
        r.check("tables/simplex-2-4", ok,
                with_matrix(c, "bound " + seq(rep.profile.bound) + " / c " + seq(rep.profile.critical) +
                                   " / t " + seq(rep.profile.deficit)));
    });
    r.guarded("tables/block-ones-3-1", [&] {
        const LinearCode c = block_ones(3, 1);
        const BoundReport rep = analyze_code(c, caps);
        bool dual_mds_only_7 = true;
        for (const auto& cert : rep.certifications)
            if (cert.predicate == "dual-mds" && cert.index != 7) dual_mds_only_7 = false;
        bool has_dual_mds_7 = false;
        for (const auto& cert : rep.certifications)
            if (cert.predicate == "dual-mds" && cert.index == 7) has_dual_mds_7 = true;
        const bool ok = rep.profile.bound == std::vector<int>{2, 4, 6} &&
                        rep.profile.critical[6] == 2 && rep.profile.critical[7] == 2 &&
                        rep.profile.critical[8] == 2 && rep.profile.d_max == 6 &&
                        rep.profile.dual_hierarchy == std::vector<int>{3, 6, 9} && dual_mds_only_7 &&
                        has_dual_mds_7;
        r.check("tables/block-ones-3-1", ok, with_matrix(c, "bound " + seq(rep.profile.bound)));
    });
    r.guarded("tables/multi-projective-3-2-2", [&] {
        const LinearCode c = multi_projective(3, 2, 2);
        const BoundReport rep = analyze_code(c, caps);
        bool kd_at_7 = false;
        for (const auto& cert : rep.certifications)
            if (cert.predicate == "k+d-1" && cert.index == 7) kd_at_7 = true;
        const bool ok = kd_at_7 && rep.profile.critical[6] == 2 &&
                        rep.profile.deficit[7 - rep.profile.k - 1] == 0;
        r.check("tables/multi-projective-3-2-2", ok, with_matrix(c, "missing the i = 7 certificate"));
    });
}

void suite_oracles(Runner& r, const VerifyOptions& opt) {
    const Caps& caps = opt.caps;
    struct P {
        long q;
        int n, k;
    };
    const std::vector<P> tiny = {{2, 4, 2}, {2, 5, 3}, {3, 4, 2}, {3, 5, 2}, {2, 5, 2}};
    int idx = 0;
    for (const auto& t : tiny) {
        const LinearCode c = random_code(t.q, t.n, t.k, opt.seed + static_cast<std::uint64_t>(idx++));
        const std::string tag = "oracles/q" + std::to_string(t.q) + "-n" + std::to_string(t.n) +
                                "-k" + std::to_string(t.k);
        r.guarded(tag, [&] {
            const auto polys = extended_weight_polynomials(c, caps);
            for (int m = 1; m <= 2; ++m) {
                const auto counts = count_by_support_weight(c, m, caps);
                const BigInt x = bigpow(BigInt(t.q), static_cast<unsigned>(m));
                BigInt sum = 0;
                for (int j = 0; j <= t.n; ++j) {
                    if (counts[static_cast<std::size_t>(j)] != polys[static_cast<std::size_t>(j)](x)) {
                        r.check(tag + "/weight-counts", false,
                                with_matrix(c, "mismatch at m=" + std::to_string(m) +
                                                   " j=" + std::to_string(j)));
                        return;
                    }
                    sum += counts[static_cast<std::size_t>(j)];
                }
                if (sum != bigpow(BigInt(t.q), static_cast<unsigned>(m * t.k))) {
                    r.check(tag + "/weight-counts", false, with_matrix(c, "counts do not sum to q^(mk)"));
                    return;
                }
            }
            r.check(tag + "/weight-counts", true);

            // tuple counts against the shortened-code polynomial at q^m
            const std::uint64_t full = (t.n == 64) ? ~0ull : (1ull << t.n) - 1;
            for (int m = 1; m <= 2; ++m) {
                for (std::uint64_t x = 0; x <= full; ++x) {
                    BigInt expected = 0;
                    if (x == 0) {
                        expected = 1;
                    } else {
                        try {
                            const LinearCode sc = shorten(c, full & ~x);
                            expected = char_poly(sc, caps)(bigpow(BigInt(t.q), static_cast<unsigned>(m)));
                        } catch (const DomainError&) {
                            expected = 0;  // zero code: no tuple unions to a nonempty set
                        }
                    }
                    if (count_tuples_with_union(c, m, x, caps) != expected) {
                        r.check(tag + "/tuple-counts", false,
                                with_matrix(c, "mismatch at m=" + std::to_string(m) +
                                                   " X=" + std::to_string(x)));
                        return;
                    }
                }
            }
            r.check(tag + "/tuple-counts", true);

            if (c.nondegenerate()) {
                const auto ce = critical_exponents_poly(c, caps);
                for (int j = 1; j <= t.n; ++j)
                    if (smallest_m_by_tuples(c, j, caps) != ce[static_cast<std::size_t>(j) - 1]) {
                        r.check(tag + "/smallest-m", false, with_matrix(c, "j=" + std::to_string(j)));
                        return;
                    }
                r.check(tag + "/smallest-m", true);
            }
        });
    }
}

void suite_bounds(Runner& r, const VerifyOptions& opt) {
    const Caps& caps = opt.caps;
    const long qs[] = {2, 3, 4};
    int made = 0;
    std::uint64_t s = opt.seed;
    while (made < opt.random_codes) {
        const long q = qs[made % 3];
        const int n = 4 + made % 7;                    // 4..10
        const int k = 1 + made % std::min(5, n - 1);   // keep k < n
        const LinearCode c = random_code(q, n, k, ++s);
        if (!c.nondegenerate()) continue;
        ++made;
        const std::string tag = "bounds/random-" + std::to_string(made);
        r.guarded(tag, [&] {
            const auto cp = critical_exponents_poly(c, caps);
            const auto cs = critical_exponents_subspace(c, caps);
            const auto cc = critical_exponents_columns(c, caps);
            if (cp != cs || cp != cc) {
                r.check(tag, false,
                        with_matrix(c, "three-method disagreement: poly " + seq(cp) + " subspace " +
                                           seq(cs) + " columns " + seq(cc)));
                return;
            }
            const CriticalProfile p = critical_profile(c, caps);
            for (int t : p.deficit)
                if (t < 0) {
                    r.check(tag, false, with_matrix(c, "negative deficit"));
                    return;
                }
            for (std::size_t i = 0; i < p.hierarchy.size(); ++i)
                if (p.hierarchy[i] > n - k + static_cast<int>(i) + 1) {
                    r.check(tag, false, with_matrix(c, "generalized Singleton bound violated"));
                    return;
                }
            if (k < n) {
                const auto direct = weight_hierarchy(dual(c), caps);
                if (direct != p.dual_hierarchy) {
                    r.check(tag, false,
                            with_matrix(c, "duality mismatch: " + seq(direct) + " vs " +
                                               seq(p.dual_hierarchy)));
                    return;
                }
            }
            if (!(char_poly(c, caps) == extended_weight_polynomial(c, n, caps))) {
                r.check(tag, false, with_matrix(c, "characteristic polynomial != P_n"));
                return;
            }
            if (max_weight(c, caps) < k) {
                r.check(tag, false, with_matrix(c, "d_max below the dimension"));
                return;
            }
            r.check(tag, true);
        });
    }
}

void suite_families(Runner& r, const VerifyOptions& opt) {
    const Caps& caps = opt.caps;
    r.guarded("families/simplex-closed-forms", [&] {
        const std::pair<long, int> cases[] = {{2, 3}, {2, 4}, {3, 2}, {3, 3}};
        for (const auto& [q, k] : cases) {
            const LinearCode c = simplex(q, k, caps);
            const BigInt bq(q);
            for (int rr = 1; rr <= k; ++rr) {
                const auto hist = subcode_support_distribution(c, rr, caps);
                const BigInt want_w = mu(bq, k) - mu(bq, k - rr);
                if (hist.size() != 1 || hist.begin()->first != want_w ||
                    hist.begin()->second != gaussian_binomial(k, rr, bq)) {
                    r.check("families/simplex-closed-forms", false,
                            with_matrix(c, "support distribution off at r=" + std::to_string(rr)));
                    return;
                }
            }
            const auto t = sharpness_deficits(c, caps);
            for (int i = k + 1; i <= c.length(); ++i)
                if (t[static_cast<std::size_t>(i - k) - 1] != simplex_deficit_formula(q, k, i)) {
                    r.check("families/simplex-closed-forms", false,
                            with_matrix(c, "deficit formula off at i=" + std::to_string(i)));
                    return;
                }
        }
        r.check("families/simplex-closed-forms", true);
    });
    r.guarded("families/hamming-hierarchy", [&] {
        const std::pair<long, int> cases[] = {{2, 3}, {2, 4}, {3, 2}};
        for (const auto& [q, k] : cases) {
            const LinearCode h = hamming(q, k, caps);
            const auto d = weight_hierarchy(h, caps);
            const BigInt bq(q);
            for (int rr = 1; rr <= h.dimension(); ++rr) {
                int expect = -1;
                for (int j = 2; j <= k; ++j)
                    if (mu(bq, j - 1) - j + 2 <= rr && BigInt(rr) <= mu(bq, j) - j) expect = rr + j;
                if (d[static_cast<std::size_t>(rr) - 1] != expect) {
                    r.check("families/hamming-hierarchy", false,
                            with_matrix(h, "r=" + std::to_string(rr)));
                    return;
                }
            }
        }
        r.check("families/hamming-hierarchy", true);
    });
    r.guarded("families/rm1", [&] {
        const std::pair<long, int> cases[] = {{2, 3}, {3, 2}, {3, 3}, {4, 2}};
        for (const auto& [q, rk] : cases) {
            const LinearCode c = reed_muller1(q, rk, caps);
            const int n = c.length();
            if (max_weight(c, caps) != n) {
                r.check("families/rm1", false, with_matrix(c, "missing the all-ones word"));
                return;
            }
            const auto ce = critical_exponents_poly(c, caps);
            for (int i = 0; i < n; ++i)
                if (ce[static_cast<std::size_t>(i)] != 1) {
                    r.check("families/rm1", false, with_matrix(c, "c_i != 1"));
                    return;
                }
            const auto d = weight_hierarchy(c, caps);
            for (int i = 1; i <= rk; ++i) {
                long want = 1;
                for (int t = 0; t < rk - 1; ++t) want *= q;
                if (i < rk) {
                    long sub = 1;
                    for (int t = 0; t < rk - i - 1; ++t) sub *= q;
                    want -= sub;
                }
                if (d[static_cast<std::size_t>(i) - 1] != want) {
                    r.check("families/rm1", false, with_matrix(c, "hierarchy off at i=" + std::to_string(i)));
                    return;
                }
            }
        }
        r.check("families/rm1", true);
    });
    r.guarded("families/other", [&] {
        const LinearCode b = block_ones(3, 1);
        if (max_weight(b, caps) != 2 * 1 * 3) {
            r.check("families/other", false, with_matrix(b, "block d_max"));
            return;
        }
        const LinearCode mp = multi_projective(3, 2, 2, caps);
        if (max_weight(mp, caps) != 2 * 3) {
            r.check("families/other", false, with_matrix(mp, "multi-projective weight"));
            return;
        }
        const LinearCode rs = reed_solomon(5, 4, 2, caps);
        if (!is_r_mds(rs, 1, caps)) {
            r.check("families/other", false, with_matrix(rs, "Reed-Solomon not MDS"));
            return;
        }
        const LinearCode a = random_code(3, 7, 3, opt.seed);
        const LinearCode bb = random_code(3, 7, 3, opt.seed);
        if (!(a == bb)) {
            r.check("families/other", false, "random_code is not deterministic");
            return;
        }
        r.check("families/other", true);
    });
}

}  // namespace

bool known_suite(const std::string& suite) {
    return suite == "tables" || suite == "paper-tables" || suite == "oracles" ||
           suite == "bounds" || suite == "families" || suite == "all";
}

std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (!known_suite(suite)) throw ParseError("unknown suite: " + suite);
    Runner r;
    const bool all = suite == "all";
    if (all || suite == "tables" || suite == "paper-tables") suite_tables(r, opt.caps);
    if (all || suite == "oracles") suite_oracles(r, opt);
    if (all || suite == "bounds") suite_bounds(r, opt);
    if (all || suite == "families") suite_families(r, opt);
    return r.results;
}

}  // namespace critcode
