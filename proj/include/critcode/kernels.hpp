#pragma once

#include <cstddef>
#include <cstdint>

namespace critcode::kernels {

/// Elementwise byte kernels behind the enumeration inner loops. Scalar
/// reference implementations always exist; an AVX2 variant is compiled in on
/// x86-64 and selected at runtime when the CPU supports it (set CRITCODE_NO_SIMD
/// in the environment to force the scalar path).
struct Ops {
    // dst[i] ^= src[i]  (addition in GF(2^e) for byte-encoded elements)
    void (*xor_into)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
    // dst[i] = (dst[i] + src[i]) mod p, inputs in [0, p), p <= 255 (prime fields)
    void (*add_mod_into)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint8_t p);
    // dst[i] |= src[i]  (nonzero-ness accumulator for support scans)
    void (*or_into)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
    // number of nonzero bytes
    std::size_t (*count_nonzero)(const std::uint8_t* v, std::size_t n);
    const char* name;
};

namespace scalar {
extern const Ops ops;
}

#if defined(CRITCODE_HAVE_AVX2)
namespace avx2 {
extern const Ops ops;
bool cpu_supported();
}
#endif

/// Kernel set selected once per process.
const Ops& active();

/// Field addition on byte-encoded element vectors, mode chosen from (p, e).
/// Extension fields with odd characteristic fall back to a q*q lookup table.
struct ByteFieldAdd {
    enum class Mode { xor_bytes, add_mod_p, table };
    Mode mode = Mode::xor_bytes;
    std::uint8_t p = 2;
    const std::uint8_t* table = nullptr;  // q*q add table, row-major
    std::size_t q = 0;
    const Ops* ops = &active();

    void add_into(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) const {
        switch (mode) {
            case Mode::xor_bytes:
                ops->xor_into(dst, src, n);
                break;
            case Mode::add_mod_p:
                ops->add_mod_into(dst, src, n, p);
                break;
            case Mode::table:
                for (std::size_t i = 0; i < n; ++i) dst[i] = table[dst[i] * q + src[i]];
                break;
        }
    }
};

}  // namespace critcode::kernels
