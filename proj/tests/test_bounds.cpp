#include <doctest.h>

#include "critcode/bounds.hpp"
#include "critcode/errors.hpp"
#include "critcode/families.hpp"

using namespace critcode;

namespace {

LinearCode from_rows(long q, int rows, int cols, std::vector<std::uint32_t> v) {
    return LinearCode(MatrixGF(Field::make_q(q), rows, cols, std::move(v)));
}

bool has_cert(const std::vector<Certification>& certs, int i, const std::string& pred) {
    for (const auto& c : certs)
        if (c.index == i && c.predicate == pred) return true;
    return false;
}

}  // namespace

TEST_CASE("general bound on the reference codes") {
    CHECK(general_kung_bound(simplex(2, 4)) == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 4});
    CHECK(general_kung_bound(block_ones(3, 1)) == std::vector<int>{2, 4, 6});
    // MDS pair: bound at i = k+1 is 2
    CHECK(general_kung_bound(reed_solomon(5, 4, 2))[0] == 2);
}

TEST_CASE("deficits on the reference codes") {
    CHECK(sharpness_deficits(simplex(2, 4)) == std::vector<int>{1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(sharpness_deficits(block_ones(3, 1)) == std::vector<int>{0, 2, 4});
    CHECK(sharpness_deficits(simplex(2, 3)) == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("kung bound values") {
    CHECK(kung_bound(simplex(2, 4)) == 4);
    CHECK(kung_bound(block_ones(3, 1)) == 6);
    CHECK(kung_bound(reed_solomon(5, 4, 2)) == 2);  // MDS dual pair: k - (k+1) + 3
}

TEST_CASE("r-MDS predicate") {
    const LinearCode d93 = dual(block_ones(3, 1));
    CHECK(is_r_mds(d93, 3));
    CHECK_FALSE(is_r_mds(d93, 1));
    CHECK(is_r_mds(reed_solomon(7, 5, 3), 1));
    CHECK(is_r_mds(reed_solomon(7, 5, 3), 2));  // monotone upward
    CHECK_THROWS_AS(is_r_mds(d93, 0), DomainError);
}

TEST_CASE("r-MDS is upward closed on every tested code") {
    for (std::uint64_t seed = 200; seed < 208; ++seed) {
        const LinearCode c = random_code(3, 6, 3, seed);
        bool seen = false;
        for (int r = 1; r <= c.dimension(); ++r) {
            const bool now = is_r_mds(c, r);
            if (seen) CHECK(now);
            seen = seen || now;
        }
        CHECK(is_r_mds(c, c.dimension()));  // d_k = n for nondegenerate codes
    }
}

TEST_CASE("sharpness certificates") {
    const auto block = sharpness_predicates(block_ones(3, 1));
    CHECK(has_cert(block, 7, "dual-mds"));
    CHECK(has_cert(block, 7, "k+d-1"));  // 7 = k + d - 1 = 6 + 2 - 1
    for (const auto& c : block) CHECK(c.index == 7);

    // simplex(2,4): bound 2 with d_max = 8 < i certifies i = 9, 10, 11
    const auto s = sharpness_predicates(simplex(2, 4));
    CHECK(has_cert(s, 9, "dual-mds"));
    CHECK(has_cert(s, 10, "dual-mds"));
    CHECK(has_cert(s, 11, "dual-mds"));
    CHECK(has_cert(s, 11, "k+d-1"));  // 11 = 4 + 8 - 1
    CHECK_FALSE(has_cert(s, 12, "dual-mds"));

    // the [12,2] repeated-column constant-weight code: every projective point
    // of PG(1,2) used 4 times; the k+d-1 condition certifies i = 9
    std::vector<std::uint32_t> rows(2 * 12, 0);
    const std::uint32_t pts[3][2] = {{0, 1}, {1, 0}, {1, 1}};
    for (int p = 0; p < 3; ++p)
        for (int copy = 0; copy < 4; ++copy) {
            const int col = 4 * p + copy;
            rows[static_cast<std::size_t>(col)] = pts[p][0];
            rows[static_cast<std::size_t>(12 + col)] = pts[p][1];
        }
    const LinearCode mp12 = from_rows(2, 2, 12, std::move(rows));
    CHECK(max_weight(mp12) == 8);
    const auto certs = sharpness_predicates(mp12);
    CHECK(has_cert(certs, 9, "k+d-1"));
    const auto profile = critical_profile(mp12);
    CHECK(profile.deficit[9 - 2 - 1] == 0);
    CHECK(profile.critical[8] == 2);
    // repeated columns stress the column-counting route (multiplicity matters)
    CHECK(profile.critical == critical_exponents_subspace(mp12));
    CHECK(profile.critical == critical_exponents_columns(mp12));
}

TEST_CASE("certificates for MDS codes without full-weight words") {
    // the even-weight [3,2] binary code is MDS with d_max = 2 < n
    const LinearCode ew = from_rows(2, 2, 3, {1, 0, 1, 0, 1, 1});
    const auto ew_certs = sharpness_predicates(ew);
    CHECK(has_cert(ew_certs, 3, "mds"));
    CHECK(critical_profile(ew).critical[2] == 2);

    // a Reed-Solomon [4,2] over GF(5) keeps its weight-4 words, so no mds certificate
    const LinearCode rs = reed_solomon(5, 4, 2);
    const auto certs = sharpness_predicates(rs);
    if (max_weight(rs) == 4) {
        CHECK_FALSE(has_cert(certs, 4, "mds"));
    } else {
        CHECK(has_cert(certs, 4, "mds"));
    }
}

TEST_CASE("bs refined check") {
    CHECK_FALSE(refined_bound_check(simplex(3, 3)).applicable);  // dual distance 3
    CHECK_FALSE(refined_bound_check(simplex(2, 4)).applicable);  // q even
    // random odd-field codes with dual distance > 3 must satisfy the stronger bound
    int applicable_seen = 0;
    for (std::uint64_t seed = 1; seed < 80; ++seed) {
        const LinearCode c = random_code(5, 8, 4, seed);
        const RefinedCheck b = refined_bound_check(c);
        if (b.applicable) {
            ++applicable_seen;
            CHECK(b.holds);
        }
    }
    CHECK(applicable_seen >= 1);
}

TEST_CASE("simplex deficit closed form") {
    CHECK(simplex_deficit_formula(2, 4, 12) == 1);
    CHECK(simplex_deficit_formula(2, 4, 9) == 0);
    CHECK(simplex_deficit_formula(2, 3, 4) == 1);
    CHECK_THROWS_AS(simplex_deficit_formula(2, 3, 3), DomainError);
    CHECK_THROWS_AS(simplex_deficit_formula(2, 3, 8), DomainError);
    for (const auto& [q, k] : std::vector<std::pair<long, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        const LinearCode s = simplex(q, k);
        const auto t = sharpness_deficits(s);
        bool some_one = false;
        for (int i = k + 1; i <= s.length(); ++i) {
            const int want = simplex_deficit_formula(q, k, i);
            CHECK(t[static_cast<std::size_t>(i - k) - 1] == want);
            CHECK((want == 0 || want == 1));
            if (want == 1 && i < s.length()) some_one = true;
        }
        CHECK(some_one);  // the bound is never simultaneously sharp on all of [k+1, n]
    }
}

TEST_CASE("first-order Reed-Muller deficit ranges") {
    // t_j = i exactly on [q^(r-1)-q^(r-i)+r-i+2, q^(r-1)-q^(r-i-1)+r-i], q >= 3
    for (const auto& [q, r] : std::vector<std::pair<long, int>>{{3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        const LinearCode c = reed_muller1(q, r);
        const int n = c.length();
        const auto t = sharpness_deficits(c);
        auto qpow = [&](int eexp) {
            long v = 1;
            for (int x = 0; x < eexp; ++x) v = v * q;
            return v;
        };
        for (int j = r + 1; j <= n; ++j) {
            int want = -1;
            for (int i = 1; i < r; ++i)
                if (qpow(r - 1) - qpow(r - i) + r - i + 2 <= j && j <= qpow(r - 1) - qpow(r - i - 1) + r - i)
                    want = i;
            REQUIRE(want != -1);
            CHECK(t[static_cast<std::size_t>(j - r) - 1] == want);
        }
        CHECK(t.back() == r - 1);  // j = q^(r-1)
    }
    // the q = 2 case falls outside the range formula: computed directly,
    // rm1(2,3) has t_4 = 1 (not r - 1 = 2)
    CHECK(sharpness_deficits(reed_muller1(2, 3)).back() == 1);
}

TEST_CASE("the deficit is nonnegative on random codes") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        const long q = 2 + seed % 3;
        const LinearCode c = random_code(q, 4 + static_cast<int>(seed % 6), 2 + static_cast<int>(seed % 3), seed);
        for (int t : sharpness_deficits(c)) CHECK(t >= 0);
    }
    CHECK(sharpness_deficits(random_code(3, 7, 3, 42)).size() == 4);  // and it computed
}

TEST_CASE("profile invariants and report assembly") {
    const BoundReport r = analyze_code(simplex(2, 4));
    CHECK(r.kung == 4);
    CHECK(r.sharp == std::vector<int>{9, 10, 11, 13, 14, 15});
    CHECK(r.profile.d_max == 8);
    const LinearCode degenerate(MatrixGF(Field::make_q(2), 2, 3, {1, 0, 0, 0, 1, 0}));
    CHECK_THROWS_AS(analyze_code(degenerate), DegenerateCode);
}
