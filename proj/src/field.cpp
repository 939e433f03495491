#include "critcode/field.hpp"

#include <algorithm>

#include "critcode/errors.hpp"

namespace critcode {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros
using Poly = std::vector<long>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul_mod(const Poly& a, const Poly& b, const Poly& f, long p) {
    if (a.empty() || b.empty()) return {};
    Poly t(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
    // reduce by the monic f
    const std::size_t e = f.size() - 1;
    for (std::size_t i = t.size(); i-- > e;) {
        const long c = t[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < e; ++j)
            t[i - e + j] = ((t[i - e + j] - c * f[j]) % p + p) % p;
        t[i] = 0;
    }
    t.resize(e);
    ptrim(t);
    return t;
}

Poly pmod(Poly a, const Poly& f, long p) {
    ptrim(a);
    const std::size_t e = f.size() - 1;
    if (a.size() <= e) return a;
    for (std::size_t i = a.size(); i-- > e;) {
        const long c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < e; ++j)
            a[i - e + j] = ((a[i - e + j] - c * f[j]) % p + p) % p;
        a[i] = 0;
    }
    a.resize(e);
    ptrim(a);
    return a;
}

long inv_mod(long a, long p) {
    // Fermat
    long r = 1, b = a % p, n = p - 2;
    while (n) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b, with b made monic first
        const long lead = b.back();
        if (lead != 1) {
            const long li = inv_mod(lead, p);
            for (auto& c : b) c = c * li % p;
        }
        Poly r = pmod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^e mod f by square-and-multiply
Poly x_power_mod(const Poly& f, long p, long e) {
    Poly r = {1};
    Poly base = pmod({0, 1}, f, p);
    while (e) {
        if (e & 1) r = pmul_mod(r, base, f, p);
        base = pmul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

long peval(const Poly& f, long x, long p) {
    long r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
    return r;
}

bool is_irreducible(const Poly& f, long p) {
    const int e = static_cast<int>(f.size()) - 1;
    if (e <= 0) return false;
    if (e == 1) return true;
    if (e <= 3) {
        // a reducible cubic or quadratic has a linear factor
        for (long a = 0; a < p; ++a)
            if (peval(f, a, p) == 0) return false;
        return true;
    }
    // f of degree e is irreducible iff gcd(f, x^(p^d) - x) is constant for all d < e
    long pd = 1;
    for (int d = 1; d < e; ++d) {
        pd *= p;
        Poly g = x_power_mod(f, p, pd);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        ptrim(g);
        Poly h = pgcd(f, g, p);
        if (h.size() > 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(long p, int e, long q, std::vector<long> modulus)
    : p_(p), e_(e), q_(q), modulus_(std::move(modulus)) {
    if (q_ <= 256) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = static_cast<std::uint8_t>(
                    add_slow(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
                mul_tab_[a * q_ + b] = static_cast<std::uint8_t>(
                    mul_slow(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
            }
    }
}

FieldPtr Field::make(long p, int e) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime");
    if (e < 1) throw DomainError("field extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > max_q) throw DomainError("field size exceeds 2^20");
    }
    std::vector<long> modulus;
    if (e == 1) {
        modulus = {0, 1};
    } else {
        // smallest monic irreducible of degree e, by encoded coefficient vector
        for (long v = 0;; ++v) {
            Poly f(static_cast<std::size_t>(e) + 1, 0);
            long t = v;
            for (int i = 0; i < e; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[e] = 1;
            if (is_irreducible(f, p)) {
                modulus.assign(f.begin(), f.end());
                break;
            }
        }
    }
    return FieldPtr(new Field(p, e, q, std::move(modulus)));
}

FieldPtr Field::make_q(long q) {
    if (q < 2) throw DomainError("field size must be >= 2");
    long p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    int e = 0;
    long t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw DomainError("field size must be a prime power");
    return make(p, e);
}

std::uint32_t Field::add_slow(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((a + static_cast<long>(b)) % p_);
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    long shift = 1;
    long x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        r += static_cast<std::uint32_t>((x % p_ + y % p_) % p_ * shift);
        x /= p_;
        y /= p_;
        shift *= p_;
    }
    return r;
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>(static_cast<long>(a) * b % p_);
    Poly pa(e_), pb(e_);
    long x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        pa[i] = x % p_;
        pb[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    ptrim(pa);
    ptrim(pb);
    Poly r = pmul_mod(pa, pb, modulus_, p_);
    std::uint32_t enc = 0;
    long shift = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        enc += static_cast<std::uint32_t>(r[i] * shift);
        shift *= p_;
    }
    return enc;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
    std::uint32_t r = 0;
    long shift = 1;
    long x = a;
    for (int i = 0; i < e_; ++i) {
        const long d = x % p_;
        r += static_cast<std::uint32_t>((d == 0 ? 0 : p_ - d) * shift);
        x /= p_;
        shift *= p_;
    }
    return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t r = 1, b = a;
    while (n) {
        if (n & 1u) r = mul(r, b);
        b = mul(b, b);
        n >>= 1u;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DomainError("division by zero in " + name());
    return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

}  // namespace critcode
