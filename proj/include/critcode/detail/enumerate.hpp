#pragma once

#include <cstdint>
#include <vector>

#include "critcode/kernels.hpp"
#include "critcode/matrix.hpp"

namespace critcode::detail {

inline bool byte_packable(const Field& f) { return f.q() <= 256; }

inline kernels::ByteFieldAdd byte_add_for(const Field& f) {
    kernels::ByteFieldAdd a;
    if (f.p() == 2) {
        a.mode = kernels::ByteFieldAdd::Mode::xor_bytes;
    } else if (f.e() == 1) {
        a.mode = kernels::ByteFieldAdd::Mode::add_mod_p;
        a.p = static_cast<std::uint8_t>(f.p());
    } else {
        a.mode = kernels::ByteFieldAdd::Mode::table;
        a.table = f.add_table();
        a.q = static_cast<std::size_t>(f.q());
    }
    return a;
}

/// scaled[(row * q + s) * n .. +n) = s * G[row], byte-encoded.
inline std::vector<std::uint8_t> scaled_rows_bytes(const MatrixGF& g) {
    const Field& f = *g.field();
    const int k = g.rows(), n = g.cols();
    const long q = f.q();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(k) * q * n);
    for (int r = 0; r < k; ++r)
        for (long s = 0; s < q; ++s) {
            std::uint8_t* dst = out.data() + (static_cast<std::size_t>(r) * q + s) * n;
            for (int c = 0; c < n; ++c)
                dst[c] = static_cast<std::uint8_t>(f.mul(static_cast<std::uint32_t>(s), g.at(r, c)));
        }
    return out;
}

/// Calls fn(word_bytes) for every one of the q^k codewords (q <= 256), the
/// zero word first, messages ascending as base-q integers with digit 0 = row 0
/// least significant. The word buffer is updated incrementally: an odometer
/// step from digit value a to b adds (b - a) * row through the byte kernels.
template <class Fn>
void for_each_codeword_bytes(const MatrixGF& g, std::uint64_t total, Fn&& fn) {
    const Field& f = *g.field();
    const int k = g.rows(), n = g.cols();
    const long q = f.q();
    const auto scaled = scaled_rows_bytes(g);
    const auto adder = byte_add_for(f);
    std::vector<std::uint8_t> word(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
    fn(static_cast<const std::uint8_t*>(word.data()));
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        int i = 0;
        while (true) {
            const std::uint32_t a = digit[i];
            const std::uint32_t b = (a + 1 == static_cast<std::uint32_t>(q)) ? 0 : a + 1;
            digit[i] = b;
            const std::uint32_t delta = f.sub(b, a);
            adder.add_into(word.data(), scaled.data() + (static_cast<std::size_t>(i) * q + delta) * n,
                           static_cast<std::size_t>(n));
            if (b != 0) break;
            ++i;  // carry
        }
        fn(static_cast<const std::uint8_t*>(word.data()));
    }
}

/// Generic fallback for q > 256: same order, full matrix-vector product per
/// message. fn(word_elements).
template <class Fn>
void for_each_codeword_generic(const MatrixGF& g, std::uint64_t total, Fn&& fn) {
    const Field& f = *g.field();
    const int k = g.rows(), n = g.cols();
    const long q = f.q();
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
    std::vector<std::uint32_t> word(static_cast<std::size_t>(n), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            int i = 0;
            while (true) {
                digit[i] = (digit[i] + 1 == static_cast<std::uint32_t>(q)) ? 0 : digit[i] + 1;
                if (digit[i] != 0) break;
                ++i;
            }
        }
        std::fill(word.begin(), word.end(), 0u);
        for (int r = 0; r < k; ++r) {
            if (digit[r] == 0) continue;
            for (int c = 0; c < n; ++c)
                word[c] = f.add(word[c], f.mul(digit[r], g.at(r, c)));
        }
        fn(static_cast<const std::uint32_t*>(word.data()));
    }
}

}  // namespace critcode::detail
