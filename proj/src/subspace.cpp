#include "critcode/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "critcode/errors.hpp"

namespace critcode {

BigInt gaussian_binomial(int k, int m, const BigInt& q) {
    if (m < 0 || m > k) throw DomainError("gaussian binomial index out of range");
    BigInt num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= bigpow(q, static_cast<unsigned>(k - i)) - 1;
        den *= bigpow(q, static_cast<unsigned>(m - i)) - 1;
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0) throw std::logic_error("gaussian binomial must divide exactly");
    return quotient;
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr f, int k, int m)
    : field_(std::move(f)), k_(k), m_(m) {
    if (m < 0 || m > k) throw DomainError("subspace dimension out of range");
    reset();
}

void SubspaceEnumerator::reset() {
    done_ = false;
    fresh_ = true;
    pivots_.resize(static_cast<std::size_t>(m_));
    std::iota(pivots_.begin(), pivots_.end(), 0);
    load_free_positions();
}

BigInt SubspaceEnumerator::total() const { return gaussian_binomial(k_, m_, BigInt(field_->q())); }

void SubspaceEnumerator::load_free_positions() {
    free_pos_.clear();
    std::vector<bool> is_pivot(static_cast<std::size_t>(k_), false);
    for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int r = 0; r < m_; ++r)
        for (int c = pivots_[static_cast<std::size_t>(r)] + 1; c < k_; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) free_pos_.emplace_back(r, c);
    free_val_.assign(free_pos_.size(), 0);
}

bool SubspaceEnumerator::advance_values() {
    // base-q odometer, last free position least significant
    const auto q = static_cast<std::uint32_t>(field_->q());
    for (std::size_t i = free_val_.size(); i-- > 0;) {
        if (++free_val_[i] < q) return true;
        free_val_[i] = 0;
    }
    return false;
}

bool SubspaceEnumerator::advance_profile() {
    // next combination of m pivot columns out of k, lexicographic
    for (int i = m_ - 1; i >= 0; --i) {
        if (pivots_[static_cast<std::size_t>(i)] < k_ - (m_ - i)) {
            ++pivots_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m_; ++j)
                pivots_[static_cast<std::size_t>(j)] = pivots_[static_cast<std::size_t>(j) - 1] + 1;
            load_free_positions();
            return true;
        }
    }
    return false;
}

bool SubspaceEnumerator::next(MatrixGF& basis) {
    if (done_) return false;
    if (basis.rows() != m_ || basis.cols() != k_ || !basis.field()->same(*field_))
        throw DomainError("basis buffer has the wrong shape or field");
    if (!fresh_) {
        if (!advance_values() && !advance_profile()) {
            done_ = true;
            return false;
        }
    }
    fresh_ = false;
    for (int r = 0; r < m_; ++r)
        for (int c = 0; c < k_; ++c) basis.set(r, c, 0);
    for (int r = 0; r < m_; ++r) basis.set(r, pivots_[static_cast<std::size_t>(r)], 1);
    for (std::size_t i = 0; i < free_pos_.size(); ++i)
        basis.set(free_pos_[i].first, free_pos_[i].second, free_val_[i]);
    return true;
}

}  // namespace critcode
