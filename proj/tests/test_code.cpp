#include <doctest.h>

#include <bit>
#include <thread>

#include "critcode/code.hpp"
#include "critcode/errors.hpp"
#include "critcode/families.hpp"

using namespace critcode;

namespace {

LinearCode from_rows(long q, int rows, int cols, std::vector<std::uint32_t> v) {
    return LinearCode(MatrixGF(Field::make_q(q), rows, cols, std::move(v)));
}

LinearCode even_weight_3_2() { return from_rows(2, 2, 3, {1, 0, 1, 0, 1, 1}); }

}  // namespace

TEST_CASE("construction canonicalizes and flags degeneracy") {
    const LinearCode rep = from_rows(2, 1, 2, {1, 1});
    CHECK(rep.length() == 2);
    CHECK(rep.dimension() == 1);
    CHECK(rep.nondegenerate());

    const LinearCode collapsed = from_rows(2, 2, 2, {1, 0, 1, 0});
    CHECK(collapsed.dimension() == 1);
    CHECK_FALSE(collapsed.nondegenerate());

    CHECK_THROWS_AS(from_rows(2, 1, 2, {0, 0}), DomainError);

    const LinearCode s = simplex(2, 3);
    CHECK(s.length() == 7);
    CHECK(s.dimension() == 3);
    CHECK(s.nondegenerate());
}

TEST_CASE("dual codes") {
    const LinearCode rep = from_rows(2, 1, 2, {1, 1});
    CHECK(dual(rep) == rep);  // self-dual

    const LinearCode h = dual(simplex(2, 3));
    CHECK(h.length() == 7);
    CHECK(h.dimension() == 4);

    const LinearCode full = from_rows(2, 2, 2, {1, 0, 0, 1});
    CHECK_THROWS_AS(dual(full), DomainError);
}

TEST_CASE("dual of dual is the original code") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const LinearCode c = random_code(3, 7, 3, seed);
        CHECK(dual(dual(c)) == c);
    }
}

TEST_CASE("shorten") {
    const LinearCode rep = from_rows(2, 1, 2, {1, 1});
    CHECK(shorten(rep, 0) == rep);

    const LinearCode ew = even_weight_3_2();
    const LinearCode sh = shorten(ew, 1ull << 2);  // kill coordinate 3
    CHECK(sh.length() == 2);
    CHECK(sh.dimension() == 1);
    CHECK(sh == from_rows(2, 1, 2, {1, 1}));

    const LinearCode s7 = simplex(2, 3);
    const LinearCode s6 = shorten(s7, 1ull << 0);
    CHECK(s6.length() == 6);
    CHECK(s6.dimension() == 2);

    CHECK_THROWS_AS(shorten(rep, 0b11), DomainError);  // kills everything
}

TEST_CASE("shortened dimension never drops by more than |S|") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const LinearCode c = random_code(2, 8, 4, seed);
        for (std::uint64_t drop : {0b1ull, 0b11ull, 0b1010ull}) {
            try {
                const LinearCode sc = shorten(c, drop);
                CHECK(sc.dimension() >= c.dimension() - std::popcount(drop));
            } catch (const DomainError&) {
                // the zero code; allowed
            }
        }
    }
}

TEST_CASE("support weight of explicit bases") {
    const LinearCode ew = even_weight_3_2();
    MatrixGF one_word(ew.field(), 1, 3);
    one_word.set(0, 0, 1);
    one_word.set(0, 1, 1);
    CHECK(support_weight(ew, one_word) == 2);

    MatrixGF two(ew.field(), 2, 3, {1, 1, 0, 0, 1, 1});
    CHECK(support_weight(ew, two) == 3);

    const LinearCode s = simplex(2, 4);
    CHECK(support_weight(s, s.generator()) == 15);

    MatrixGF not_word(ew.field(), 1, 3);
    not_word.set(0, 0, 1);
    CHECK_THROWS_AS(support_weight(ew, not_word), DomainError);
}

TEST_CASE("max weight") {
    CHECK(max_weight(block_ones(3, 1)) == 6);
    CHECK(max_weight(simplex(2, 4)) == 8);  // constant weight
    CHECK(max_weight(reed_muller1(3, 2)) == 3);
    CHECK(max_weight(reed_muller1(2, 3)) == 4);

    Caps tight;
    tight.max_enum = 8;
    CHECK_THROWS_AS(max_weight(simplex(2, 4), tight), CapExceeded);
}

TEST_CASE("max weight is at least the dimension") {
    for (std::uint64_t seed = 10; seed < 18; ++seed) {
        const LinearCode c = random_code(3, 8, 4, seed);
        CHECK(max_weight(c) >= c.dimension());
    }
}

TEST_CASE("generic enumeration path for q > 256") {
    // [2, 1] repetition over GF(257): every nonzero word has weight 2
    const LinearCode rep = from_rows(257, 1, 2, {1, 1});
    CHECK(max_weight(rep) == 2);
}

TEST_CASE("the full generator has support n exactly for nondegenerate codes") {
    const LinearCode good = simplex(2, 3);
    CHECK(support_weight(good, good.generator()) == good.length());
    const LinearCode bad = from_rows(2, 2, 3, {1, 0, 0, 0, 1, 0});
    CHECK_FALSE(bad.nondegenerate());
    CHECK(support_weight(bad, bad.generator()) < bad.length());
}

TEST_CASE("cached derived values are safe to race") {
    const LinearCode c = simplex(2, 4);
    LinearCode copy = c;  // shares the cache block
    long w1 = 0, w2 = 0;
    const MatrixGF* d1 = nullptr;
    const MatrixGF* d2 = nullptr;
    std::thread t1([&] {
        w1 = max_weight(c);
        d1 = &dual(c).generator();
    });
    std::thread t2([&] {
        w2 = max_weight(copy);
        d2 = &dual(copy).generator();
    });
    t1.join();
    t2.join();
    CHECK(w1 == 8);
    CHECK(w2 == 8);
    CHECK(d1 == d2);  // one shared dual, initialized once
}
