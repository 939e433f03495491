#include "critcode/invariants.hpp"

#include <algorithm>

#include "critcode/detail/enumerate.hpp"
#include "critcode/errors.hpp"
#include "critcode/matroid.hpp"

namespace critcode {

void validate_hierarchy(const std::vector<int>& d, int n) {
    int prev = 0;
    for (int v : d) {
        if (v <= prev || v > n) throw DomainError("invalid weight hierarchy");
        prev = v;
    }
}

std::vector<int> weight_hierarchy(const LinearCode& c, const Caps& caps) {
    const MatroidTable& t = matroid_table(c, caps);
    std::vector<int> d(static_cast<std::size_t>(t.k));
    for (int r = t.k; r >= 1; --r) {
        int best = t.n + 1;
        for (int nu = r; nu <= t.k; ++nu)
            best = std::min(best, t.min_size[static_cast<std::size_t>(nu)]);
        if (best > t.n) throw std::logic_error("nullity never reaches the code dimension");
        d[static_cast<std::size_t>(r) - 1] = best;
    }
    return d;
}

std::vector<int> wei_dual_hierarchy(const std::vector<int>& d, int n) {
    validate_hierarchy(d, n);
    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    for (int v : d) removed[static_cast<std::size_t>(n) + 1 - v] = true;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - d.size());
    for (int i = 1; i <= n; ++i)
        if (!removed[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<int> singleton_defects(const LinearCode& c, const Caps& caps) {
    const int n = c.length(), k = c.dimension();
    std::vector<int> s(static_cast<std::size_t>(n), -1);
    if (k < n) {
        const auto d_dual = wei_dual_hierarchy(weight_hierarchy(c, caps), n);
        for (int i = 1; i <= n - k; ++i)
            s[static_cast<std::size_t>(i) - 1] = k + i - d_dual[static_cast<std::size_t>(i) - 1];
    }
    return s;
}

std::vector<int> critical_exponents_poly(const LinearCode& c, const Caps& caps) {
    if (!c.nondegenerate()) throw DegenerateCode("critical exponents need a nondegenerate code");
    const int n = c.length(), k = c.dimension();
    const auto polys = extended_weight_polynomials(c, caps);
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int assigned = 0;
    const BigInt q(c.q());
    for (int m = 1; m <= k && assigned < n; ++m) {
        const BigInt x = bigpow(q, static_cast<unsigned>(m));
        BigInt suffix = 0;
        std::vector<BigInt> suffix_at(static_cast<std::size_t>(n) + 1);
        for (int j = n; j >= 1; --j) {
            suffix += polys[static_cast<std::size_t>(j)](x);
            suffix_at[static_cast<std::size_t>(j)] = suffix;
        }
        for (int j = 1; j <= n; ++j)
            if (out[static_cast<std::size_t>(j) - 1] == 0 && suffix_at[static_cast<std::size_t>(j)] != 0) {
                out[static_cast<std::size_t>(j) - 1] = m;
                ++assigned;
            }
    }
    if (assigned < n)
        throw std::logic_error("critical exponent search did not terminate by m = k");
    return out;
}

namespace {

void check_subspace_budget(const SubspaceEnumerator& e, const Caps& caps) {
    if (e.total() > BigInt(caps.max_subspaces))
        throw CapExceeded("subspace enumeration beyond cap");
}

// largest support weight over the subcodes spanned by the rows of B * G,
// over all canonical m-dimensional B
int max_subcode_support(const LinearCode& c, int m, const Caps& caps) {
    const Field& f = *c.field();
    const MatrixGF& g = c.generator();
    const int n = c.length(), k = c.dimension();
    SubspaceEnumerator e(c.field(), k, m);
    check_subspace_budget(e, caps);
    MatrixGF basis(c.field(), m, k);
    int best = 0;
    if (detail::byte_packable(f)) {
        const auto& ops = kernels::active();
        const auto adder = detail::byte_add_for(f);
        const auto scaled = detail::scaled_rows_bytes(g);
        const long q = f.q();
        std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
        std::vector<std::uint8_t> acc(static_cast<std::size_t>(n));
        while (e.next(basis)) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int r = 0; r < m; ++r) {
                std::fill(row.begin(), row.end(), 0);
                for (int col = 0; col < k; ++col) {
                    const std::uint32_t s = basis.at(r, col);
                    if (s == 0) continue;
                    adder.add_into(row.data(),
                                   scaled.data() + (static_cast<std::size_t>(col) * q + s) * n,
                                   static_cast<std::size_t>(n));
                }
                ops.or_into(acc.data(), row.data(), static_cast<std::size_t>(n));
            }
            const int w = static_cast<int>(ops.count_nonzero(acc.data(), static_cast<std::size_t>(n)));
            if (w > best) best = w;
            if (best == n) break;
        }
    } else {
        while (e.next(basis)) {
            const MatrixGF sub = matmul(basis, g);
            int w = 0;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i)
                    if (sub.at(i, j) != 0) {
                        ++w;
                        break;
                    }
            if (w > best) best = w;
            if (best == n) break;
        }
    }
    return best;
}

}  // namespace

std::vector<int> critical_exponents_subspace(const LinearCode& c, const Caps& caps) {
    if (!c.nondegenerate()) throw DegenerateCode("critical exponents need a nondegenerate code");
    const int n = c.length(), k = c.dimension();
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int assigned = 0;
    for (int m = 1; m <= k && assigned < n; ++m) {
        const int wmax = max_subcode_support(c, m, caps);
        for (int j = 1; j <= wmax; ++j)
            if (out[static_cast<std::size_t>(j) - 1] == 0) {
                out[static_cast<std::size_t>(j) - 1] = m;
                ++assigned;
            }
    }
    if (assigned < n)
        throw std::logic_error("subcode support never reached the full length");
    return out;
}

std::vector<int> critical_exponents_columns(const LinearCode& c, const Caps& caps) {
    if (!c.nondegenerate()) throw DegenerateCode("critical exponents need a nondegenerate code");
    const Field& f = *c.field();
    const MatrixGF& g = c.generator();
    const int n = c.length(), k = c.dimension();
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int assigned = 0;
    std::vector<std::uint32_t> col(static_cast<std::size_t>(k));
    for (int m = 1; m <= k && assigned < n; ++m) {
        const int s = k - m;
        SubspaceEnumerator e(c.field(), k, s);
        check_subspace_budget(e, caps);
        MatrixGF basis(c.field(), s, k);
        int min_cols = n + 1;
        while (e.next(basis)) {
            // pivot columns of the canonical basis, for the membership reduction
            int contained = 0;
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < k; ++i) col[static_cast<std::size_t>(i)] = g.at(i, j);
                for (int r = 0; r < s; ++r) {
                    int pivot = -1;
                    for (int i = 0; i < k; ++i)
                        if (basis.at(r, i) != 0) {
                            pivot = i;
                            break;
                        }
                    const std::uint32_t factor = col[static_cast<std::size_t>(pivot)];
                    if (factor == 0) continue;
                    for (int i = pivot; i < k; ++i)
                        col[static_cast<std::size_t>(i)] =
                            f.sub(col[static_cast<std::size_t>(i)], f.mul(factor, basis.at(r, i)));
                }
                bool zero = true;
                for (int i = 0; i < k; ++i)
                    if (col[static_cast<std::size_t>(i)] != 0) {
                        zero = false;
                        break;
                    }
                if (zero) ++contained;
            }
            if (contained < min_cols) min_cols = contained;
            if (min_cols == 0) break;
        }
        for (int j = 1; j <= n; ++j)
            if (out[static_cast<std::size_t>(j) - 1] == 0 && min_cols <= n - j) {
                out[static_cast<std::size_t>(j) - 1] = m;
                ++assigned;
            }
    }
    if (assigned < n)
        throw std::logic_error("column subspace search did not terminate by m = k");
    return out;
}

std::map<int, BigInt> subcode_support_distribution(const LinearCode& c, int r, const Caps& caps) {
    if (r < 0 || r > c.dimension()) throw DomainError("subcode dimension out of range");
    const int n = c.length(), k = c.dimension();
    SubspaceEnumerator e(c.field(), k, r);
    check_subspace_budget(e, caps);
    MatrixGF basis(c.field(), r, k);
    std::map<int, BigInt> hist;
    while (e.next(basis)) {
        const MatrixGF sub = matmul(basis, c.generator());
        int w = 0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < r; ++i)
                if (sub.at(i, j) != 0) {
                    ++w;
                    break;
                }
        hist[w] += 1;
    }
    return hist;
}

BigInt mu(const BigInt& q, int s) {
    if (s < 0 || q < 2) throw DomainError("mu needs s >= 0 and q >= 2");
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(bigpow(q, static_cast<unsigned>(s)) - 1, q - 1, quotient,
                                     remainder);
    if (remainder != 0) throw std::logic_error("mu must divide exactly");
    return quotient;
}

}  // namespace critcode
