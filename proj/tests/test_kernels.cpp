#include <doctest.h>

#include <vector>

#include "critcode/kernels.hpp"

using namespace critcode;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<std::uint8_t> random_bytes(std::uint64_t& s, std::size_t n, unsigned bound) {
    std::vector<std::uint8_t> v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(splitmix(s) % bound);
    return v;
}

void compare_ops(const kernels::Ops& a, const kernels::Ops& b) {
    std::uint64_t s = 7;
    const std::size_t lens[] = {0, 1, 5, 31, 32, 33, 64, 100, 129};
    for (std::size_t n : lens) {
        // xor / or / count agree
        auto x1 = random_bytes(s, n, 256), x2 = x1;
        const auto y = random_bytes(s, n, 256);
        a.xor_into(x1.data(), y.data(), n);
        b.xor_into(x2.data(), y.data(), n);
        CHECK(x1 == x2);
        auto o1 = random_bytes(s, n, 256), o2 = o1;
        a.or_into(o1.data(), y.data(), n);
        b.or_into(o2.data(), y.data(), n);
        CHECK(o1 == o2);
        CHECK(a.count_nonzero(y.data(), n) == b.count_nonzero(y.data(), n));

        for (unsigned p : {2u, 3u, 5u, 7u, 127u, 131u, 251u}) {
            auto d1 = random_bytes(s, n, p), d2 = d1;
            const auto src = random_bytes(s, n, p);
            a.add_mod_into(d1.data(), src.data(), n, static_cast<std::uint8_t>(p));
            b.add_mod_into(d2.data(), src.data(), n, static_cast<std::uint8_t>(p));
            CHECK(d1 == d2);
        }
    }
}

}  // namespace

TEST_CASE("scalar kernels compute field addition and weights") {
    const auto& ops = kernels::scalar::ops;
    std::uint8_t d[4] = {0, 1, 2, 4};
    const std::uint8_t s[4] = {0, 4, 3, 4};
    ops.add_mod_into(d, s, 4, 5);
    CHECK(d[0] == 0);
    CHECK(d[1] == 0);
    CHECK(d[2] == 0);
    CHECK(d[3] == 3);
    CHECK(ops.count_nonzero(d, 4) == 1);
    std::uint8_t x[3] = {1, 2, 3};
    const std::uint8_t y[3] = {3, 2, 1};
    ops.xor_into(x, y, 3);
    CHECK(x[0] == 2);
    CHECK(x[1] == 0);
    CHECK(x[2] == 2);
}

TEST_CASE("scalar add_mod matches integer arithmetic at the edges") {
    const auto& ops = kernels::scalar::ops;
    for (unsigned p : {2u, 3u, 129u, 251u}) {
        for (unsigned a = 0; a < p; a += (p > 16 ? 13 : 1)) {
            for (unsigned b = 0; b < p; b += (p > 16 ? 17 : 1)) {
                std::uint8_t d = static_cast<std::uint8_t>(a);
                const std::uint8_t src = static_cast<std::uint8_t>(b);
                ops.add_mod_into(&d, &src, 1, static_cast<std::uint8_t>(p));
                CHECK(d == (a + b) % p);
            }
        }
    }
}

#if defined(CRITCODE_HAVE_AVX2)
TEST_CASE("avx2 kernels are equivalent to the scalar reference") {
    if (!kernels::avx2::cpu_supported()) {
        MESSAGE("cpu has no avx2; skipping");
        return;
    }
    compare_ops(kernels::scalar::ops, kernels::avx2::ops);
}
#endif

TEST_CASE("dispatched kernels are equivalent to the scalar reference") {
    compare_ops(kernels::scalar::ops, kernels::active());
}
