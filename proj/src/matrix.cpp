#include "critcode/matrix.hpp"

#include <bit>

#include "critcode/errors.hpp"

namespace critcode {

MatrixGF::MatrixGF(FieldPtr f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0 || cols > max_cols) throw DomainError("bad matrix shape");
}

MatrixGF::MatrixGF(FieldPtr f, int rows, int cols, std::vector<std::uint32_t> entries)
    : field_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0 || cols > max_cols) throw DomainError("bad matrix shape");
    if (a_.size() != static_cast<std::size_t>(rows) * cols)
        throw DomainError("entry count does not match matrix shape");
    for (auto v : a_)
        if (v >= static_cast<std::uint32_t>(field_->q())) throw DomainError("entry out of field range");
}

bool MatrixGF::operator==(const MatrixGF& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_->same(*other.field_) &&
           a_ == other.a_;
}

MatrixGF rref(const MatrixGF& m) {
    MatrixGF r = m;
    const Field& f = *m.field();
    int pivot_row = 0;
    for (int c = 0; c < r.cols() && pivot_row < r.rows(); ++c) {
        int pr = -1;
        for (int i = pivot_row; i < r.rows(); ++i)
            if (r.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != pivot_row)
            for (int j = 0; j < r.cols(); ++j) {
                std::uint32_t t = r.at(pivot_row, j);
                r.set(pivot_row, j, r.at(pr, j));
                r.set(pr, j, t);
            }
        const std::uint32_t pinv = f.inv(r.at(pivot_row, c));
        if (pinv != 1)
            for (int j = 0; j < r.cols(); ++j) r.set(pivot_row, j, f.mul(pinv, r.at(pivot_row, j)));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == pivot_row) continue;
            const std::uint32_t v = r.at(i, c);
            if (v == 0) continue;
            for (int j = 0; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(v, r.at(pivot_row, j))));
        }
        ++pivot_row;
    }
    return r;
}

int rank(const MatrixGF& m) {
    MatrixGF r = m;
    const Field& f = *m.field();
    int rk = 0;
    for (int c = 0; c < r.cols() && rk < r.rows(); ++c) {
        int pr = -1;
        for (int i = rk; i < r.rows(); ++i)
            if (r.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rk)
            for (int j = c; j < r.cols(); ++j) {
                std::uint32_t t = r.at(rk, j);
                r.set(rk, j, r.at(pr, j));
                r.set(pr, j, t);
            }
        const std::uint32_t pinv = f.inv(r.at(rk, c));
        for (int i = rk + 1; i < r.rows(); ++i) {
            const std::uint32_t v = r.at(i, c);
            if (v == 0) continue;
            const std::uint32_t factor = f.mul(v, pinv);
            for (int j = c; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(rk, j))));
        }
        ++rk;
    }
    return rk;
}

MatrixGF null_space(const MatrixGF& m) {
    const Field& f = *m.field();
    MatrixGF r = rref(m);
    std::vector<int> pivot_col;
    std::vector<int> pivot_of_col(m.cols(), -1);
    int pr = 0;
    for (int c = 0; c < r.cols() && pr < r.rows(); ++c)
        if (r.at(pr, c) != 0) {
            pivot_of_col[c] = pr;
            pivot_col.push_back(c);
            ++pr;
        }
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);

    MatrixGF basis(m.field(), static_cast<int>(free_cols.size()), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        basis.set(static_cast<int>(i), fc, 1);
        for (std::size_t j = 0; j < pivot_col.size(); ++j)
            basis.set(static_cast<int>(i), pivot_col[j], f.neg(r.at(static_cast<int>(j), fc)));
    }
    return rref(basis);
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF t(m.field(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

MatrixGF matmul(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.rows() || !a.field()->same(*b.field()))
        throw DomainError("matmul shape/field mismatch");
    const Field& f = *a.field();
    MatrixGF c(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const std::uint32_t v = a.at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.set(i, j, f.add(c.at(i, j), f.mul(v, b.at(l, j))));
        }
    return c;
}

MatrixGF vstack(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.cols() || !a.field()->same(*b.field()))
        throw DomainError("vstack shape/field mismatch");
    MatrixGF c(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) c.set(a.rows() + i, j, b.at(i, j));
    return c;
}

MatrixGF select_columns(const MatrixGF& m, std::uint64_t mask) {
    const int nsel = std::popcount(mask);
    MatrixGF s(m.field(), m.rows(), nsel);
    int out = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (!(mask >> c & 1u)) continue;
        for (int i = 0; i < m.rows(); ++i) s.set(i, out, m.at(i, c));
        ++out;
    }
    return s;
}

int rank_of_columns(const MatrixGF& m, std::uint64_t mask) {
    return rank(select_columns(m, mask));
}

}  // namespace critcode
