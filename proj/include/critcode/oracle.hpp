#pragma once

#include <cstdint>
#include <vector>

#include "critcode/bigint.hpp"
#include "critcode/code.hpp"

namespace critcode {

/// GF(q^m) built as a degree-m extension of a base field GF(q): elements are
/// polynomials over the base field modulo the monic irreducible of degree m
/// with the smallest encoding, packed base q (digit = base element value).
/// The base field embeds as the constants, so base element a has the same
/// encoded value a in the extension; a matrix over GF(q) can be read over
/// GF(q^m) verbatim.
class ExtensionField {
public:
    ExtensionField(FieldPtr base, int m);  // q^m <= 2^24

    const FieldPtr& base() const { return base_; }
    int m() const { return m_; }
    std::uint64_t size() const { return size_; }  // q^m
    /// m+1 base-field element values, constant term first, leading 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint64_t embed(std::uint32_t base_element) const { return base_element; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

private:
    FieldPtr base_;
    int m_;
    std::uint64_t size_;
    std::vector<std::uint32_t> modulus_;
};

/// Counts the codewords of the code read over GF(q^m) by Hamming weight;
/// entry j of the result is the number of weight-j words. Deliberately plain
/// (full matrix-vector product per message): this is the brute-force check
/// for the extended weight polynomials, so it shares nothing with them.
std::vector<BigInt> count_by_support_weight(const LinearCode& c, int m, const Caps& caps = {});

/// Number of ordered m-tuples of codewords whose supports union exactly to
/// `subset` (bit i = coordinate i). Plain enumeration of all (q^k)^m tuples.
BigInt count_tuples_with_union(const LinearCode& c, int m, std::uint64_t subset,
                               const Caps& caps = {});

/// Least m such that m codewords can union to support size >= j.
int smallest_m_by_tuples(const LinearCode& c, int j, const Caps& caps = {});

}  // namespace critcode
