#pragma once

#include <cstdint>
#include <vector>

#include "critcode/field.hpp"

namespace critcode {

/// Dense row-major matrix over a finite field. At most 64 columns, so column
/// subsets fit in a std::uint64_t mask (bit i = column i).
class MatrixGF {
public:
    MatrixGF(FieldPtr f, int rows, int cols);  // zero-filled
    MatrixGF(FieldPtr f, int rows, int cols, std::vector<std::uint32_t> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint32_t v) { a_[static_cast<std::size_t>(r) * cols_ + c] = v; }
    const std::uint32_t* row(int r) const { return a_.data() + static_cast<std::size_t>(r) * cols_; }
    std::uint32_t* row(int r) { return a_.data() + static_cast<std::size_t>(r) * cols_; }

    bool operator==(const MatrixGF& other) const;

    static constexpr int max_cols = 64;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<std::uint32_t> a_;
};

int rank(const MatrixGF& m);
/// Reduced row echelon form; first-nonzero pivoting, fully deterministic.
MatrixGF rref(const MatrixGF& m);
/// Rows span {v : M v^T = 0}; returned basis is itself in reduced echelon form.
MatrixGF null_space(const MatrixGF& m);
MatrixGF transpose(const MatrixGF& m);
MatrixGF matmul(const MatrixGF& a, const MatrixGF& b);
MatrixGF vstack(const MatrixGF& a, const MatrixGF& b);
MatrixGF select_columns(const MatrixGF& m, std::uint64_t mask);
int rank_of_columns(const MatrixGF& m, std::uint64_t mask);

}  // namespace critcode
