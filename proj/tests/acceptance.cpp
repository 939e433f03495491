// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "critcode/bounds.hpp"
#include "critcode/errors.hpp"
#include "critcode/families.hpp"
#include "critcode/matroid.hpp"
#include "critcode/oracle.hpp"
#include "critcode/report.hpp"

using namespace critcode;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_seconds)
        error = "exceeded the " + std::to_string(budget_seconds) + "s budget";
    if (error.empty()) {
        std::printf("PASS criterion %d (%s) [%.2fs]\n", number, name.c_str(), elapsed);
    } else {
        ++failures;
        std::printf("FAIL criterion %d (%s) [%.2fs]: %s\n", number, name.c_str(), elapsed,
                    error.c_str());
    }
    std::fflush(stdout);
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

template <class T>
std::string seq(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// shared corpus for the randomized criteria; parameters cycle deterministically
std::vector<LinearCode> random_corpus(int count, std::uint64_t seed0, int max_n, int max_k) {
    const long qs[] = {2, 3, 4};
    std::vector<LinearCode> out;
    std::uint64_t seed = seed0;
    int i = 0;
    while (static_cast<int>(out.size()) < count) {
        const long q = qs[i % 3];
        const int n = 4 + i % (max_n - 3);
        const int k = 1 + i % std::min(max_k, n - 1);
        ++i;
        out.push_back(random_code(q, n, k, ++seed));
    }
    return out;
}

void structural_checks(const LinearCode& c) {
    const int n = c.length(), k = c.dimension();
    const auto d = weight_hierarchy(c);
    for (std::size_t i = 0; i < d.size(); ++i)
        expect(d[i] <= n - k + static_cast<int>(i) + 1, "generalized Singleton bound violated");
    expect(max_weight(c) >= k, "d_max below the dimension");
    expect(char_poly(c) == extended_weight_polynomial(c, n), "char poly differs from P_n");
    if (k < n) {
        const auto dd = wei_dual_hierarchy(d, n);
        expect(dd == weight_hierarchy(dual(c)), "duality round-trip failed");
        const auto s = singleton_defects(c);
        for (int i = 1; i < n - k; ++i)
            expect(s[static_cast<std::size_t>(i)] <= s[static_cast<std::size_t>(i) - 1],
                   "dual defects not monotone");
    }
    const auto ce = critical_exponents_poly(c);
    for (std::size_t i = 1; i < ce.size(); ++i)
        expect(ce[i] >= ce[i - 1], "critical exponents not monotone");
}

}  // namespace

int main() {
    criterion(1, "simplex(2,4) reference table", 5.0, [] {
        const BoundReport r = analyze_code(simplex(2, 4));
        expect(r.profile.bound == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4},
               "bound row is " + seq(r.profile.bound));
        const std::vector<int> c_tail(r.profile.critical.begin() + 4, r.profile.critical.end());
        expect(c_tail == std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 4},
               "critical row is " + seq(c_tail));
        expect(r.profile.deficit == std::vector<int>{1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0},
               "deficit row is " + seq(r.profile.deficit));
        expect(r.profile.hierarchy == std::vector<int>{8, 12, 14, 15},
               "hierarchy is " + seq(r.profile.hierarchy));
        expect(r.profile.dual_hierarchy == std::vector<int>{3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15},
               "dual hierarchy is " + seq(r.profile.dual_hierarchy));
    });

    criterion(2, "block_ones(3,1) reference values", 5.0, [] {
        const BoundReport r = analyze_code(block_ones(3, 1));
        expect(r.profile.bound == std::vector<int>{2, 4, 6}, "bound row is " + seq(r.profile.bound));
        expect(r.profile.critical[6] == 2 && r.profile.critical[7] == 2 && r.profile.critical[8] == 2,
               "critical exponents are " + seq(r.profile.critical));
        expect(r.profile.d_max == 6, "d_max is " + std::to_string(r.profile.d_max));
        expect(r.profile.dual_hierarchy == std::vector<int>{3, 6, 9},
               "dual hierarchy is " + seq(r.profile.dual_hierarchy));
        std::vector<int> dual_mds;
        for (const auto& cert : r.certifications)
            if (cert.predicate == "dual-mds") dual_mds.push_back(cert.index);
        expect(dual_mds == std::vector<int>{7}, "dual-mds certifies " + seq(dual_mds));
    });

    criterion(3, "simplex deficits match the closed form", 60.0, [] {
        for (const auto& [q, k] : std::vector<std::pair<long, int>>{{2, 3}, {2, 4}, {3, 3}}) {
            const LinearCode s = simplex(q, k);
            const auto t = sharpness_deficits(s);
            for (int i = k + 1; i <= s.length(); ++i) {
                const int got = t[static_cast<std::size_t>(i - k) - 1];
                expect(got == simplex_deficit_formula(q, k, i),
                       "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                           " i=" + std::to_string(i));
                expect(got == 0 || got == 1, "deficit outside {0,1}");
            }
        }
    });

    criterion(4, "first-order Reed-Muller profile (q >= 3)", 60.0, [] {
        for (const auto& [q, r] : std::vector<std::pair<long, int>>{{3, 2}, {3, 3}, {4, 2}}) {
            const LinearCode c = reed_muller1(q, r);
            const int n = c.length();
            for (int v : critical_exponents_poly(c))
                expect(v == 1, "a full-weight word forces every exponent to 1");
            const auto d = weight_hierarchy(c);
            for (int i = 1; i <= r; ++i) {
                long want = 1;
                for (int t = 0; t < r - 1; ++t) want *= q;
                if (i < r) {
                    long sub = 1;
                    for (int t = 0; t < r - i - 1; ++t) sub *= q;
                    want -= sub;
                }
                expect(d[static_cast<std::size_t>(i) - 1] == want,
                       "hierarchy off at i=" + std::to_string(i));
            }
            const auto t = sharpness_deficits(c);
            expect(t[static_cast<std::size_t>(n - r) - 1] == r - 1,
                   "t at the full length must be r - 1");
        }
    });

    criterion(5, "three-method agreement on 50 random codes", 300.0, [] {
        const auto corpus = random_corpus(50, 20250808, 10, 5);
        for (const auto& c : corpus) {
            const auto cp = critical_exponents_poly(c);
            expect(cp == critical_exponents_subspace(c), "poly vs subspace disagreement");
            expect(cp == critical_exponents_columns(c), "poly vs columns disagreement");
            if (c.dimension() < c.length())
                for (int t : sharpness_deficits(c)) expect(t >= 0, "negative deficit");
        }
    });

    criterion(6, "brute-force counting oracles", 300.0, [] {
        // extension-field weight counts against P_j(q^m)
        int used = 0;
        std::uint64_t seed = 321;
        const long qs[] = {2, 3, 4};
        while (used < 20) {
            const long q = qs[used % 3];
            const int k = 2 + used % 2;
            const int n = 4 + used % 4;
            const LinearCode c = random_code(q, n, k, ++seed);
            const auto polys = extended_weight_polynomials(c);
            for (int m = 1; m <= 2; ++m) {
                std::uint64_t qmk = 1;
                for (int i = 0; i < m * k; ++i) qmk *= static_cast<std::uint64_t>(q);
                if (qmk > (1ull << 16)) continue;
                const auto counts = count_by_support_weight(c, m);
                const BigInt x = bigpow(BigInt(q), static_cast<unsigned>(m));
                BigInt total = 0;
                for (int j = 0; j <= n; ++j) {
                    expect(counts[static_cast<std::size_t>(j)] == polys[static_cast<std::size_t>(j)](x),
                           "weight count mismatch at j=" + std::to_string(j));
                    total += counts[static_cast<std::size_t>(j)];
                }
                expect(total == BigInt(qmk), "counts do not sum to q^(mk)");
            }
            ++used;
        }
        // tuple counts against the shortened-code polynomials, all subsets
        seed = 654;
        for (int i = 0; i < 8; ++i) {
            const long q = (i % 2 == 0) ? 2 : 3;
            const int n = 4 + i % 2;
            const int k = 2 + i % 2;
            const LinearCode c = random_code(q, n, k, ++seed);
            const std::uint64_t full = (1ull << n) - 1;
            for (int m = 1; m <= 2; ++m) {
                const BigInt x = bigpow(BigInt(q), static_cast<unsigned>(m));
                for (std::uint64_t sub = 0; sub <= full; ++sub) {
                    BigInt expected = 0;
                    if (sub == 0) {
                        expected = 1;
                    } else {
                        try {
                            expected = char_poly(shorten(c, full & ~sub))(x);
                        } catch (const DomainError&) {
                            expected = 0;
                        }
                    }
                    expect(count_tuples_with_union(c, m, sub) == expected,
                           "tuple count mismatch at X=" + std::to_string(sub) +
                               " m=" + std::to_string(m));
                }
            }
        }
    });

    criterion(7, "structural invariants across the corpus", 300.0, [] {
        for (const auto& c : random_corpus(50, 20250808, 10, 5)) structural_checks(c);
        structural_checks(simplex(2, 4));
        structural_checks(simplex(3, 3));
        structural_checks(hamming(2, 3));
        structural_checks(block_ones(3, 1));
        structural_checks(reed_muller1(3, 3));
        structural_checks(reed_solomon(5, 4, 2));
        structural_checks(multi_projective(3, 2, 2));
    });

    criterion(8, "multi_projective(3,2,2) certified sharp at i = 7", 5.0, [] {
        const BoundReport r = analyze_code(multi_projective(3, 2, 2));
        bool kd_at_7 = false;
        for (const auto& cert : r.certifications)
            if (cert.predicate == "k+d-1" && cert.index == 7) kd_at_7 = true;
        expect(kd_at_7, "missing the k+d-1 certificate at i = 7");
        expect(r.profile.critical[6] == 2, "c_7 must be 2");
        expect(r.profile.deficit[7 - r.profile.k - 1] == 0, "t_7 must be 0");
    });

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
