#include "critcode/kernels.hpp"

#if defined(CRITCODE_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace critcode::kernels::avx2 {

namespace {

void xor_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

// lanes hold values in [0, p); t = a + b wraps only when p > 128, and a wrap
// always means the true sum is >= p, so reduce when (t < a) or (t > p - 1)
void add_mod_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t p) {
    const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
    const __m256i vpm1 = _mm256_set1_epi8(static_cast<char>(p - 1));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i t = _mm256_add_epi8(a, b);
        // wrapped: a > t (unsigned); over: t > p-1 (unsigned)
        const __m256i wrapped =
            _mm256_xor_si256(_mm256_cmpeq_epi8(_mm256_subs_epu8(a, t), zero), _mm256_set1_epi8(-1));
        const __m256i over =
            _mm256_xor_si256(_mm256_cmpeq_epi8(_mm256_subs_epu8(t, vpm1), zero), _mm256_set1_epi8(-1));
        const __m256i reduce = _mm256_or_si256(wrapped, over);
        const __m256i r = _mm256_sub_epi8(t, _mm256_and_si256(vp, reduce));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < n; ++i) {
        const unsigned s = static_cast<unsigned>(dst[i]) + src[i];
        dst[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
}

void or_into_impl(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

std::size_t count_nonzero_impl(const std::uint8_t* v, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t c = 0, i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const unsigned mask =
            static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, zero)));
        c += 32u - std::popcount(mask);
    }
    for (; i < n; ++i) c += v[i] != 0;
    return c;
}

}  // namespace

const Ops ops = {xor_into_impl, add_mod_into_impl, or_into_impl, count_nonzero_impl, "avx2"};

bool cpu_supported() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
}

}  // namespace critcode::kernels::avx2

#endif  // CRITCODE_HAVE_AVX2
