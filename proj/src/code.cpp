#include "critcode/code.hpp"

#include <algorithm>

#include "critcode/detail/enumerate.hpp"
#include "critcode/errors.hpp"

namespace critcode {

namespace {

MatrixGF canonical_generator(const MatrixGF& g) {
    if (g.rows() == 0) throw DomainError("generator must have at least one row");
    MatrixGF r = rref(g);
    const int k = [&] {
        int nonzero = 0;
        for (int i = 0; i < r.rows(); ++i) {
            bool z = true;
            for (int j = 0; j < r.cols(); ++j)
                if (r.at(i, j) != 0) {
                    z = false;
                    break;
                }
            if (!z) ++nonzero;
        }
        return nonzero;
    }();
    if (k == 0) throw DomainError("zero row space is not a code");
    if (k == r.rows()) return r;
    MatrixGF out(g.field(), k, g.cols());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < g.cols(); ++j) out.set(i, j, r.at(i, j));
    return out;
}

}  // namespace

LinearCode::LinearCode(const MatrixGF& g)
    : gen_(canonical_generator(g)), nondegenerate_(true), cache_(std::make_shared<Cache>()) {
    for (int c = 0; c < gen_.cols(); ++c) {
        bool zero_col = true;
        for (int r = 0; r < gen_.rows(); ++r)
            if (gen_.at(r, c) != 0) {
                zero_col = false;
                break;
            }
        if (zero_col) {
            nondegenerate_ = false;
            break;
        }
    }
}

const MatrixGF& parity_check(const LinearCode& c) {
    std::call_once(c.cache_->parity_once, [&] {
        c.cache_->parity = std::make_shared<const MatrixGF>(null_space(c.generator()));
    });
    return *c.cache_->parity;
}

const LinearCode& dual(const LinearCode& c) {
    if (c.dimension() == c.length())
        throw DomainError("dual of the full space is zero-dimensional");
    std::call_once(c.cache_->dual_once, [&] {
        c.cache_->dual = std::make_shared<const LinearCode>(parity_check(c));
    });
    return *c.cache_->dual;
}

LinearCode shorten(const LinearCode& c, std::uint64_t drop) {
    const int n = c.length();
    if (n < 64 && (drop >> n) != 0) throw DomainError("shorten mask outside the coordinate set");
    // messages whose codeword vanishes on the dropped coordinates
    const MatrixGF g_s = select_columns(c.generator(), drop);
    const MatrixGF msgs = null_space(transpose(g_s));  // rows: surviving messages
    if (msgs.rows() == 0) throw DomainError("shortening leaves the zero code");
    const MatrixGF words = matmul(msgs, c.generator());
    const std::uint64_t keep = (n == 64 ? ~0ull : (1ull << n) - 1) & ~drop;
    return LinearCode(select_columns(words, keep));
}

bool is_codeword(const LinearCode& c, const MatrixGF& row) {
    if (row.rows() != 1 || row.cols() != c.length() || !row.field()->same(*c.field()))
        throw DomainError("candidate word has the wrong shape or field");
    return rank(vstack(c.generator(), row)) == c.dimension();
}

int support_weight(const LinearCode& c, const MatrixGF& basis) {
    if (basis.cols() != c.length() || !basis.field()->same(*c.field()))
        throw DomainError("basis has the wrong shape or field");
    for (int i = 0; i < basis.rows(); ++i) {
        MatrixGF row(basis.field(), 1, basis.cols());
        for (int j = 0; j < basis.cols(); ++j) row.set(0, j, basis.at(i, j));
        if (!is_codeword(c, row)) throw DomainError("basis row is not a codeword");
    }
    int w = 0;
    for (int j = 0; j < basis.cols(); ++j)
        for (int i = 0; i < basis.rows(); ++i)
            if (basis.at(i, j) != 0) {
                ++w;
                break;
            }
    return w;
}

std::uint64_t support_mask(const std::uint32_t* word, int n) {
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i)
        if (word[i] != 0) m |= 1ull << i;
    return m;
}

std::uint64_t codeword_count(const LinearCode& c, const Caps& caps) {
    std::uint64_t total = 1;
    const auto q = static_cast<std::uint64_t>(c.q());
    for (int i = 0; i < c.dimension(); ++i) {
        if (total > caps.max_enum / q + 1) throw CapExceeded("q^k beyond the enumeration cap");
        total *= q;
        if (total > caps.max_enum) throw CapExceeded("q^k beyond the enumeration cap");
    }
    return total;
}

long max_weight(const LinearCode& c, const Caps& caps) {
    const std::uint64_t total = codeword_count(c, caps);
    std::call_once(c.cache_->dmax_once, [&] {
        const auto& ops = kernels::active();
        const int n = c.length();
        long best = 0;
        if (detail::byte_packable(*c.field())) {
            detail::for_each_codeword_bytes(c.generator(), total, [&](const std::uint8_t* w) {
                const long wt = static_cast<long>(ops.count_nonzero(w, static_cast<std::size_t>(n)));
                if (wt > best) best = wt;
            });
        } else {
            detail::for_each_codeword_generic(c.generator(), total, [&](const std::uint32_t* w) {
                long wt = 0;
                for (int i = 0; i < n; ++i) wt += w[i] != 0;
                if (wt > best) best = wt;
            });
        }
        c.cache_->dmax = best;
    });
    return c.cache_->dmax;
}

}  // namespace critcode
