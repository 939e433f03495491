#include "critcode/families.hpp"

#include <algorithm>

#include "critcode/errors.hpp"
#include "critcode/invariants.hpp"

namespace critcode {

namespace {

// column vector -> integer with the first row as the most significant digit
std::vector<std::uint32_t> decode_column(long value, long q, int k) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(value % q);
        value /= q;
    }
    return v;
}

MatrixGF from_columns(FieldPtr f, int k, const std::vector<std::vector<std::uint32_t>>& cols) {
    MatrixGF g(std::move(f), k, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < k; ++i) g.set(i, static_cast<int>(j), cols[j][static_cast<std::size_t>(i)]);
    return g;
}

std::vector<std::vector<std::uint32_t>> projective_points(const Field& f, int k) {
    const long q = f.q();
    long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > (1l << 30)) throw CapExceeded("projective point enumeration too large");
    }
    std::vector<std::vector<std::uint32_t>> pts;
    for (long v = 1; v < total; ++v) {
        auto col = decode_column(v, q, k);
        std::uint32_t first = 0;
        for (auto x : col)
            if (x != 0) {
                first = x;
                break;
            }
        if (first == 1) pts.push_back(std::move(col));
    }
    return pts;
}

}  // namespace

LinearCode simplex(long q, int k, const Caps& caps) {
    (void)caps;
    if (k < 2) throw DomainError("simplex needs k >= 2");
    auto f = Field::make_q(q);
    if (mu(BigInt(q), k) > MatrixGF::max_cols)
        throw CapExceeded("simplex length beyond matrix width");
    auto pts = projective_points(*f, k);
    return LinearCode(from_columns(f, k, pts));
}

LinearCode hamming(long q, int k, const Caps& caps) { return dual(simplex(q, k, caps)); }

LinearCode reed_muller1(long q, int r, const Caps& caps) {
    (void)caps;
    if (r < 2) throw DomainError("first-order Reed-Muller needs r >= 2");
    auto f = Field::make_q(q);
    long n = 1;
    for (int i = 0; i < r - 1; ++i) {
        n *= q;
        if (n > MatrixGF::max_cols) throw CapExceeded("Reed-Muller length beyond matrix width");
    }
    std::vector<std::vector<std::uint32_t>> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (long v = 0; v < n; ++v) {
        auto tail = decode_column(v, q, r - 1);
        std::vector<std::uint32_t> col(static_cast<std::size_t>(r));
        col[0] = 1;
        std::copy(tail.begin(), tail.end(), col.begin() + 1);
        cols.push_back(std::move(col));
    }
    return LinearCode(from_columns(f, r, cols));
}

LinearCode reed_solomon(long q, int n, int k, const Caps& caps) {
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    if (n > q) throw DomainError("Reed-Solomon needs n <= q distinct evaluation points");
    auto f = Field::make_q(q);
    MatrixGF g(f, k, n);
    for (int j = 0; j < n; ++j) {
        const auto point = static_cast<std::uint32_t>(j);
        for (int i = 0; i < k; ++i) g.set(i, j, f->pow(point, static_cast<std::uint64_t>(i)));
    }
    LinearCode c(g);
    // MDS sanity whenever the sweep is affordable: d_1 = n - k + 1
    if (n <= caps.max_n && weight_hierarchy(c, caps)[0] != n - k + 1)
        throw std::logic_error("Reed-Solomon construction is not MDS");
    return c;
}

LinearCode block_ones(int m, int l, long q) {
    if (m < 1 || l < 1) throw DomainError("need m >= 1 and l >= 1");
    auto f = Field::make_q(q);
    const int width = 2 * l + 1;
    const int n = width * m;
    if (n > MatrixGF::max_cols) throw CapExceeded("block length beyond matrix width");
    MatrixGF h(f, m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < width; ++j) h.set(i, width * i + j, 1);
    return LinearCode(null_space(h));
}

LinearCode multi_projective(long q, int k, int j, const Caps& caps) {
    if (k < 2) throw DomainError("multi-projective needs k >= 2");
    if (j < 1 || j > q - 1) throw DomainError("need 1 <= j <= q - 1 scalar representatives");
    (void)caps;
    auto f = Field::make_q(q);
    auto pts = projective_points(*f, k);
    const BigInt n = BigInt(j) * mu(BigInt(q), k);
    if (n > MatrixGF::max_cols) throw CapExceeded("multi-projective length beyond matrix width");
    std::vector<std::vector<std::uint32_t>> cols;
    cols.reserve(pts.size() * static_cast<std::size_t>(j));
    for (const auto& p : pts)
        for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(j); ++s) {
            std::vector<std::uint32_t> col(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) col[i] = f->mul(s, p[i]);
            cols.push_back(std::move(col));
        }
    return LinearCode(from_columns(f, k, cols));
}

namespace {

struct SplitMix64 {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

}  // namespace

LinearCode random_code(long q, int n, int k, std::uint64_t seed, const Caps& caps) {
    (void)caps;
    if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
    if (n > MatrixGF::max_cols) throw CapExceeded("length beyond matrix width");
    auto f = Field::make_q(q);
    SplitMix64 rng{seed};
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::uint32_t> entries(static_cast<std::size_t>(k) * n);
        for (auto& x : entries) x = static_cast<std::uint32_t>(rng.next() % static_cast<std::uint64_t>(q));
        MatrixGF g(f, k, n, std::move(entries));
        if (rank(g) != k) continue;
        LinearCode c(g);
        if (!c.nondegenerate()) continue;
        return c;
    }
    throw DomainError("no full-rank nondegenerate sample found for these parameters");
}

FamilySpec::Kind family_kind_from_name(const std::string& name) {
    if (name == "simplex") return FamilySpec::Kind::simplex;
    if (name == "hamming") return FamilySpec::Kind::hamming;
    if (name == "rm1") return FamilySpec::Kind::reed_muller1;
    if (name == "rs") return FamilySpec::Kind::reed_solomon;
    if (name == "block-ones") return FamilySpec::Kind::block_ones;
    if (name == "multi-projective") return FamilySpec::Kind::multi_projective;
    if (name == "random") return FamilySpec::Kind::random;
    throw ParseError("unknown family: " + name);
}

namespace {

long need(const FamilySpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end()) throw ParseError("family parameter missing: --" + key);
    return it->second;
}

}  // namespace

LinearCode make_family(const FamilySpec& s, const Caps& caps) {
    using K = FamilySpec::Kind;
    switch (s.kind) {
        case K::simplex:
            return simplex(need(s, "q"), static_cast<int>(need(s, "k")), caps);
        case K::hamming:
            return hamming(need(s, "q"), static_cast<int>(need(s, "k")), caps);
        case K::reed_muller1:
            return reed_muller1(need(s, "q"), static_cast<int>(need(s, "r")), caps);
        case K::reed_solomon:
            return reed_solomon(need(s, "q"), static_cast<int>(need(s, "n")),
                                static_cast<int>(need(s, "k")), caps);
        case K::block_ones: {
            auto it = s.params.find("q");
            const long q = it == s.params.end() ? 2 : it->second;
            return block_ones(static_cast<int>(need(s, "m")), static_cast<int>(need(s, "l")), q);
        }
        case K::multi_projective:
            return multi_projective(need(s, "q"), static_cast<int>(need(s, "k")),
                                    static_cast<int>(need(s, "j")), caps);
        case K::random:
            return random_code(need(s, "q"), static_cast<int>(need(s, "n")),
                               static_cast<int>(need(s, "k")),
                               static_cast<std::uint64_t>(need(s, "seed")), caps);
    }
    throw ParseError("unknown family kind");
}

}  // namespace critcode
