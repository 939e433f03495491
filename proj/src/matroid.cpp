#include "critcode/matroid.hpp"

#include <bit>

#include "critcode/errors.hpp"

namespace critcode {

namespace {

// Visits every subset of the columns of m exactly once as (size, rank of the
// selected columns). DFS over the include/exclude tree keeps an incremental
// echelon basis of the chosen columns, so each inclusion costs one reduction
// instead of a fresh elimination.
template <class Visit>
void sweep_column_subsets(const MatrixGF& m, Visit&& visit) {
    const Field& f = *m.field();
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint32_t>> scratch(
        static_cast<std::size_t>(cols), std::vector<std::uint32_t>(static_cast<std::size_t>(rows)));
    // basis vector with first nonzero (= 1 after normalization) at row i, if any;
    // eliminating at ascending pivots only ever touches later rows, so one pass
    // per inserted column suffices
    std::vector<const std::uint32_t*> basis_at(static_cast<std::size_t>(rows), nullptr);
    int rank_now = 0;

    auto rec = [&](auto&& self, int c, int taken) -> void {
        if (c == cols) {
            visit(taken, rank_now);
            return;
        }
        self(self, c + 1, taken);  // exclude column c

        auto& v = scratch[static_cast<std::size_t>(c)];
        for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = m.at(i, c);
        int i = 0;
        while (i < rows) {
            if (v[static_cast<std::size_t>(i)] == 0) {
                ++i;
                continue;
            }
            const std::uint32_t* bv = basis_at[static_cast<std::size_t>(i)];
            if (bv == nullptr) break;  // new pivot at row i
            const std::uint32_t factor = v[static_cast<std::size_t>(i)];
            for (int r = i; r < rows; ++r)
                v[static_cast<std::size_t>(r)] =
                    f.sub(v[static_cast<std::size_t>(r)], f.mul(factor, bv[r]));
            ++i;
        }
        if (i == rows) {
            self(self, c + 1, taken + 1);  // dependent column, rank unchanged
        } else {
            const std::uint32_t pinv = f.inv(v[static_cast<std::size_t>(i)]);
            if (pinv != 1)
                for (int r = i; r < rows; ++r)
                    v[static_cast<std::size_t>(r)] = f.mul(pinv, v[static_cast<std::size_t>(r)]);
            basis_at[static_cast<std::size_t>(i)] = v.data();
            ++rank_now;
            self(self, c + 1, taken + 1);
            --rank_now;
            basis_at[static_cast<std::size_t>(i)] = nullptr;
        }
    };
    rec(rec, 0, 0);
}

std::vector<std::vector<std::uint64_t>> binomial_table(int n) {
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] +
                c[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
    }
    return c;
}

}  // namespace

const MatroidTable& matroid_table(const LinearCode& c, const Caps& caps) {
    if (c.length() > caps.max_n) throw CapExceeded("code length beyond the subset-sweep cap");
    std::call_once(c.cache_->matroid_once, [&] {
        auto t = std::make_shared<MatroidTable>();
        t->n = c.length();
        t->k = c.dimension();
        t->count.assign(static_cast<std::size_t>(t->n) + 1,
                        std::vector<std::uint64_t>(static_cast<std::size_t>(t->k) + 1, 0));
        t->min_size.assign(static_cast<std::size_t>(t->k) + 1, t->n + 1);
        const MatrixGF& h = parity_check(c);
        sweep_column_subsets(h, [&](int size, int rk) {
            const int nu = size - rk;
            t->count[static_cast<std::size_t>(size)][static_cast<std::size_t>(nu)] += 1;
            if (size < t->min_size[static_cast<std::size_t>(nu)])
                t->min_size[static_cast<std::size_t>(nu)] = size;
        });
        c.cache_->matroid = std::move(t);
    });
    return *c.cache_->matroid;
}

int nullity(const LinearCode& c, std::uint64_t subset) {
    const int n = c.length();
    if (n < 64 && (subset >> n) != 0) throw DomainError("subset outside the coordinate set");
    return std::popcount(subset) - rank_of_columns(parity_check(c), subset);
}

WeightPolynomial extended_weight_polynomial(const LinearCode& c, int j, const Caps& caps) {
    if (j < 0 || j > c.length()) throw DomainError("weight index out of range");
    const MatroidTable& t = matroid_table(c, caps);
    const auto binom = binomial_table(t.n);
    WeightPolynomial p;
    const int sign_j = (j % 2 == 0) ? 1 : -1;
    for (int g = 0; g <= j; ++g) {
        const std::uint64_t ways = binom[static_cast<std::size_t>(t.n - g)][static_cast<std::size_t>(j - g)];
        if (ways == 0) continue;
        const int sign = ((g % 2 == 0) ? 1 : -1) * sign_j;
        for (int nu = 0; nu <= t.k; ++nu) {
            const std::uint64_t cnt = t.count[static_cast<std::size_t>(g)][static_cast<std::size_t>(nu)];
            if (cnt == 0) continue;
            p.add_term(nu, BigInt(sign) * BigInt(cnt) * BigInt(ways));
        }
    }
    return p;
}

std::vector<WeightPolynomial> extended_weight_polynomials(const LinearCode& c, const Caps& caps) {
    std::vector<WeightPolynomial> out;
    out.reserve(static_cast<std::size_t>(c.length()) + 1);
    for (int j = 0; j <= c.length(); ++j) out.push_back(extended_weight_polynomial(c, j, caps));
    return out;
}

WeightPolynomial char_poly(const LinearCode& c, const Caps& caps) {
    if (c.length() > caps.max_n) throw CapExceeded("code length beyond the subset-sweep cap");
    const int k = c.dimension();
    std::vector<BigInt> coeff(static_cast<std::size_t>(k) + 1, 0);
    sweep_column_subsets(c.generator(), [&](int size, int rk) {
        coeff[static_cast<std::size_t>(k - rk)] += (size % 2 == 0) ? 1 : -1;
    });
    return WeightPolynomial(std::move(coeff));
}

}  // namespace critcode
