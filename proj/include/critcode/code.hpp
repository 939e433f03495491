#pragma once

#include <cstdint>
#include <memory>
#include <mutex>

#include "critcode/caps.hpp"
#include "critcode/matrix.hpp"

namespace critcode {

struct MatroidTable;

/// An [n, k] linear code, stored through its reduced-echelon generator matrix
/// so equal codes compare equal. Immutable; derived objects (dual code, d_max,
/// the subset-sweep table) are cached behind std::call_once and shared by
/// copies.
class LinearCode {
public:
    /// Code generated by the row space of g. Rank-deficient inputs are
    /// re-echeloned (k = rank); a zero row space is a DomainError.
    explicit LinearCode(const MatrixGF& g);

    const FieldPtr& field() const { return gen_.field(); }
    long q() const { return gen_.field()->q(); }
    int length() const { return gen_.cols(); }     // n
    int dimension() const { return gen_.rows(); }  // k
    const MatrixGF& generator() const { return gen_; }

    /// True iff no coordinate is zero on every codeword.
    bool nondegenerate() const { return nondegenerate_; }

    bool operator==(const LinearCode& other) const { return gen_ == other.gen_; }

private:
    MatrixGF gen_;
    bool nondegenerate_;

    struct Cache {
        std::once_flag dual_once;
        std::shared_ptr<const LinearCode> dual;
        std::once_flag parity_once;
        std::shared_ptr<const MatrixGF> parity;
        std::once_flag dmax_once;
        long dmax = -1;
        std::once_flag matroid_once;
        std::shared_ptr<const MatroidTable> matroid;
    };
    std::shared_ptr<Cache> cache_;

    friend const LinearCode& dual(const LinearCode& c);
    friend const MatrixGF& parity_check(const LinearCode& c);
    friend long max_weight(const LinearCode& c, const Caps& caps);
    friend const MatroidTable& matroid_table(const LinearCode& c, const Caps& caps);
};

/// The [n, n-k] dual code. k = n is a DomainError (zero-dimensional dual).
const LinearCode& dual(const LinearCode& c);

/// A parity check matrix: reduced-echelon basis of the null space of the
/// generator. For k = n this is the 0 x n matrix (no checks).
const MatrixGF& parity_check(const LinearCode& c);

/// Code on the coordinates outside `drop` whose words are the restrictions of
/// codewords vanishing on `drop` (bit i of the mask = coordinate i). Errors
/// if no nonzero codeword survives.
LinearCode shorten(const LinearCode& c, std::uint64_t drop);

bool is_codeword(const LinearCode& c, const MatrixGF& row);

/// Number of coordinates where some row of `basis` is nonzero. Every row must
/// be a codeword of c.
int support_weight(const LinearCode& c, const MatrixGF& basis);

/// Support of a single codeword given as a coordinate mask.
std::uint64_t support_mask(const std::uint32_t* word, int n);

/// Largest Hamming weight of a codeword, by exact enumeration of all q^k
/// codewords (messages in ascending integer order).
long max_weight(const LinearCode& c, const Caps& caps = {});

/// q^k as a checked value; CapExceeded if above caps.max_enum.
std::uint64_t codeword_count(const LinearCode& c, const Caps& caps);

}  // namespace critcode
