#pragma once

#include "critcode/bigint.hpp"
#include "critcode/matrix.hpp"

namespace critcode {

/// Number of m-dimensional subspaces of F_q^k, exactly.
BigInt gaussian_binomial(int k, int m, const BigInt& q);

/// Visits every m-dimensional subspace of F_q^k exactly once through its
/// canonical reduced-echelon basis matrix (m x k). Pivot-column profiles run
/// in lexicographic order; for a fixed profile the free entries run through
/// base-q assignments in ascending integer order (row-major digits, last
/// position least significant). Deterministic.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(FieldPtr f, int k, int m);

    BigInt total() const;

    /// Writes the next canonical basis into `basis` (must be m x k over the
    /// same field). Returns false when exhausted.
    bool next(MatrixGF& basis);

    void reset();

private:
    bool advance_values();
    bool advance_profile();
    void load_free_positions();

    FieldPtr field_;
    int k_, m_;
    bool done_ = false, fresh_ = true;
    std::vector<int> pivots_;                     // m ascending column indices
    std::vector<std::pair<int, int>> free_pos_;   // (row, col), row-major order
    std::vector<std::uint32_t> free_val_;
};

}  // namespace critcode
