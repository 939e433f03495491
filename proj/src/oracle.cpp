#include "critcode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "critcode/errors.hpp"

namespace critcode {

namespace {

using BasePoly = std::vector<std::uint32_t>;  // coefficients = base element values

void btrim(BasePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BasePoly bmul_mod(const Field& f, const BasePoly& a, const BasePoly& b, const BasePoly& mod) {
    if (a.empty() || b.empty()) return {};
    BasePoly t(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            t[i + j] = f.add(t[i + j], f.mul(a[i], b[j]));
    }
    const std::size_t m = mod.size() - 1;
    for (std::size_t i = t.size(); i-- > m;) {
        const std::uint32_t c = t[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            t[i - m + j] = f.sub(t[i - m + j], f.mul(c, mod[j]));
        t[i] = 0;
    }
    t.resize(m);
    btrim(t);
    return t;
}

BasePoly bmod(BasePoly a, const BasePoly& mod, const Field& f) {
    btrim(a);
    const std::size_t m = mod.size() - 1;
    if (a.size() <= m) return a;
    for (std::size_t i = a.size(); i-- > m;) {
        const std::uint32_t c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            a[i - m + j] = f.sub(a[i - m + j], f.mul(c, mod[j]));
        a[i] = 0;
    }
    a.resize(m);
    btrim(a);
    return a;
}

BasePoly bgcd(BasePoly a, BasePoly b, const Field& f) {
    btrim(a);
    btrim(b);
    while (!b.empty()) {
        const std::uint32_t lead = b.back();
        if (lead != 1) {
            const std::uint32_t li = f.inv(lead);
            for (auto& c : b) c = f.mul(li, c);
        }
        BasePoly r = bmod(std::move(a), b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint32_t beval(const BasePoly& g, std::uint32_t x, const Field& f) {
    std::uint32_t r = 0;
    for (std::size_t i = g.size(); i-- > 0;) r = f.add(f.mul(r, x), g[i]);
    return r;
}

bool birreducible(const BasePoly& g, const Field& f) {
    const int m = static_cast<int>(g.size()) - 1;
    if (m <= 0) return false;
    if (m == 1) return true;
    if (m <= 3) {
        for (long a = 0; a < f.q(); ++a)
            if (beval(g, static_cast<std::uint32_t>(a), f) == 0) return false;
        return true;
    }
    // gcd(g, y^(q^d) - y) constant for all d < m
    for (int d = 1; d < m; ++d) {
        std::uint64_t qd = 1;
        for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(f.q());
        BasePoly y = bmod({0, 1}, g, f);
        BasePoly r = {1};
        BasePoly base = y;
        std::uint64_t e = qd;
        while (e) {
            if (e & 1u) r = bmul_mod(f, r, base, g);
            base = bmul_mod(f, base, base, g);
            e >>= 1u;
        }
        // r - y
        if (r.size() < 2) r.resize(2, 0);
        r[1] = f.sub(r[1], 1);
        btrim(r);
        if (bgcd(g, r, f).size() > 1) return false;
    }
    return true;
}

}  // namespace

ExtensionField::ExtensionField(FieldPtr base, int m) : base_(std::move(base)), m_(m) {
    if (m < 1) throw DomainError("extension degree must be >= 1");
    size_ = 1;
    for (int i = 0; i < m; ++i) {
        size_ *= static_cast<std::uint64_t>(base_->q());
        if (size_ > (1ull << 24)) throw DomainError("extension field beyond 2^24 elements");
    }
    const Field& f = *base_;
    // smallest monic irreducible of degree m over the base field, by encoding
    for (std::uint64_t v = 0;; ++v) {
        BasePoly g(static_cast<std::size_t>(m) + 1, 0);
        std::uint64_t t = v;
        for (int i = 0; i < m; ++i) {
            g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % static_cast<std::uint64_t>(f.q()));
            t /= static_cast<std::uint64_t>(f.q());
        }
        g[static_cast<std::size_t>(m)] = 1;
        if (birreducible(g, f)) {
            modulus_ = g;
            break;
        }
    }
}

std::uint64_t ExtensionField::add(std::uint64_t a, std::uint64_t b) const {
    const Field& f = *base_;
    const auto q = static_cast<std::uint64_t>(f.q());
    std::uint64_t r = 0, shift = 1;
    for (int i = 0; i < m_; ++i) {
        r += static_cast<std::uint64_t>(
                 f.add(static_cast<std::uint32_t>(a % q), static_cast<std::uint32_t>(b % q))) *
             shift;
        a /= q;
        b /= q;
        shift *= q;
    }
    return r;
}

std::uint64_t ExtensionField::mul(std::uint64_t a, std::uint64_t b) const {
    const Field& f = *base_;
    const auto q = static_cast<std::uint64_t>(f.q());
    BasePoly pa(static_cast<std::size_t>(m_)), pb(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        pa[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(a % q);
        pb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(b % q);
        a /= q;
        b /= q;
    }
    btrim(pa);
    btrim(pb);
    const BasePoly r = bmul_mod(f, pa, pb, modulus_);
    std::uint64_t enc = 0, shift = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        enc += static_cast<std::uint64_t>(r[i]) * shift;
        shift *= q;
    }
    return enc;
}

std::vector<BigInt> count_by_support_weight(const LinearCode& c, int m, const Caps& caps) {
    const int n = c.length(), k = c.dimension();
    const ExtensionField ext(c.field(), m);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > caps.max_enum / ext.size() + 1) throw CapExceeded("extension enumeration beyond cap");
        total *= ext.size();
        if (total > caps.max_enum) throw CapExceeded("extension enumeration beyond cap");
    }
    const MatrixGF& g = c.generator();
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> msg(static_cast<std::size_t>(k), 0);
    std::vector<std::uint64_t> word(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            int i = 0;
            while (true) {
                msg[static_cast<std::size_t>(i)] =
                    (msg[static_cast<std::size_t>(i)] + 1 == ext.size()) ? 0
                                                                         : msg[static_cast<std::size_t>(i)] + 1;
                if (msg[static_cast<std::size_t>(i)] != 0) break;
                ++i;
            }
        }
        std::fill(word.begin(), word.end(), 0ull);
        for (int r = 0; r < k; ++r) {
            const std::uint64_t e = msg[static_cast<std::size_t>(r)];
            if (e == 0) continue;
            for (int j = 0; j < n; ++j)
                word[static_cast<std::size_t>(j)] =
                    ext.add(word[static_cast<std::size_t>(j)], ext.mul(e, ext.embed(g.at(r, j))));
        }
        int w = 0;
        for (int j = 0; j < n; ++j) w += word[static_cast<std::size_t>(j)] != 0;
        counts[static_cast<std::size_t>(w)] += 1;
    }
    return counts;
}

namespace {

std::vector<std::uint64_t> all_support_masks(const LinearCode& c, const Caps& caps) {
    const std::uint64_t total = codeword_count(c, caps);
    const Field& f = *c.field();
    const MatrixGF& g = c.generator();
    const int n = c.length(), k = c.dimension();
    const auto q = static_cast<std::uint64_t>(f.q());
    std::vector<std::uint64_t> masks;
    masks.reserve(total);
    std::vector<std::uint32_t> msg(static_cast<std::size_t>(k), 0);
    std::vector<std::uint32_t> word(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx != 0) {
            int i = 0;
            while (true) {
                msg[static_cast<std::size_t>(i)] =
                    (msg[static_cast<std::size_t>(i)] + 1 == q) ? 0 : msg[static_cast<std::size_t>(i)] + 1;
                if (msg[static_cast<std::size_t>(i)] != 0) break;
                ++i;
            }
        }
        std::fill(word.begin(), word.end(), 0u);
        for (int r = 0; r < k; ++r) {
            const std::uint32_t e = msg[static_cast<std::size_t>(r)];
            if (e == 0) continue;
            for (int j = 0; j < n; ++j)
                word[static_cast<std::size_t>(j)] =
                    f.add(word[static_cast<std::size_t>(j)], f.mul(e, g.at(r, j)));
        }
        masks.push_back(support_mask(word.data(), n));
    }
    return masks;
}

}  // namespace

BigInt count_tuples_with_union(const LinearCode& c, int m, std::uint64_t subset, const Caps& caps) {
    if (m < 1) throw DomainError("tuple length must be >= 1");
    const int n = c.length();
    if (n < 64 && (subset >> n) != 0) throw DomainError("subset outside the coordinate set");
    const std::uint64_t words = codeword_count(c, caps);
    std::uint64_t tuples = 1;
    for (int i = 0; i < m; ++i) {
        if (tuples > caps.max_enum / words + 1) throw CapExceeded("tuple enumeration beyond cap");
        tuples *= words;
        if (tuples > caps.max_enum) throw CapExceeded("tuple enumeration beyond cap");
    }
    const auto masks = all_support_masks(c, caps);
    BigInt count = 0;
    auto rec = [&](auto&& self, int depth, std::uint64_t acc) -> void {
        if (depth == m) {
            if (acc == subset) count += 1;
            return;
        }
        for (const std::uint64_t mk : masks) self(self, depth + 1, acc | mk);
    };
    rec(rec, 0, 0);
    return count;
}

int smallest_m_by_tuples(const LinearCode& c, int j, const Caps& caps) {
    if (j < 1 || j > c.length()) throw DomainError("target support out of range");
    const auto masks = all_support_masks(c, caps);
    std::unordered_set<std::uint64_t> reach(masks.begin(), masks.end());
    for (int m = 1; m <= c.dimension(); ++m) {
        for (const std::uint64_t u : reach)
            if (std::popcount(u) >= j) return m;
        std::unordered_set<std::uint64_t> next;
        for (const std::uint64_t u : reach)
            for (const std::uint64_t v : masks) next.insert(u | v);
        reach = std::move(next);
    }
    throw DomainError("no m codewords reach the target support (degenerate code?)");
}

}  // namespace critcode
