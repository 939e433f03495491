#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace critcode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^e) with q = p^e <= 2^20.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the value
/// are the coefficients of the element as a polynomial over GF(p), least
/// significant digit = constant term. 0 and 1 encode the additive and
/// multiplicative identities. For e >= 2 the field is F_p[x]/(modulus), where
/// modulus is the monic irreducible polynomial of degree e with the smallest
/// encoded coefficient vector, so the construction is reproducible.
///
/// Immutable after construction; all operations are const and thread-safe.
class Field {
public:
    static FieldPtr make(long p, int e);
    /// Factors q = p^e; rejects values that are not prime powers.
    static FieldPtr make_q(long q);

    long p() const { return p_; }
    int e() const { return e_; }
    long q() const { return q_; }
    /// e+1 coefficients over GF(p), constant term first, leading 1. {0, 1} when e == 1.
    const std::vector<long>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // a != 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;

    bool same(const Field& other) const;
    std::string name() const;  // "GF(9)"

    /// Flat q*q lookup tables, built when q <= 256; nullptr otherwise.
    const std::uint8_t* add_table() const { return add_tab_.empty() ? nullptr : add_tab_.data(); }
    const std::uint8_t* mul_table() const { return mul_tab_.empty() ? nullptr : mul_tab_.data(); }

    static constexpr long max_q = 1l << 20;

private:
    Field(long p, int e, long q, std::vector<long> modulus);
    std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    long p_;
    int e_;
    long q_;
    std::vector<long> modulus_;
    std::vector<std::uint8_t> add_tab_, mul_tab_;
};

}  // namespace critcode
