#include "critcode/kernels.hpp"

#include <cstdlib>

namespace critcode::kernels {

namespace scalar {

namespace {

void xor_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void add_mod_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned s = static_cast<unsigned>(dst[i]) + src[i];
        dst[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
}

void or_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::size_t count_nonzero_impl(const std::uint8_t* v, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += v[i] != 0;
    return c;
}

}  // namespace

const Ops ops = {xor_into_impl, add_mod_into_impl, or_into_impl, count_nonzero_impl, "scalar"};

}  // namespace scalar

const Ops& active() {
    static const Ops* chosen = [] {
        if (std::getenv("CRITCODE_NO_SIMD") != nullptr) return &scalar::ops;
#if defined(CRITCODE_HAVE_AVX2)
        if (avx2::cpu_supported()) return &avx2::ops;
#endif
        return &scalar::ops;
    }();
    return *chosen;
}

}  // namespace critcode::kernels
