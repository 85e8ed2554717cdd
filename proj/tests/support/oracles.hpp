#pragma once

// Test-only oracles. Nothing here calls into the library under test.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

/// Multivariate integer polynomial, monomials keyed by exponent vectors.
class Poly {
public:
    using Monomial = std::vector<int>;

    static Poly var(std::size_t index, std::size_t nvars) {
        Poly p(nvars);
        Monomial m(nvars, 0);
        m[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Poly constant(long c, std::size_t nvars) {
        Poly p(nvars);
        if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(a.nvars_);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Poly operator*(long k, const Poly& a) { return constant(k, a.nvars_) * a; }

    Poly pow(int k) const {
        Poly r = constant(1, nvars_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

private:
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    void add_term(const Monomial& m, const mpz_class& c) {
        mpz_class& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    std::size_t nvars_;
    std::map<Monomial, mpz_class> terms_;
};

/// Table of exact cubes |k| <= limit, for fast brute-force lookups.
inline std::map<std::int64_t, std::int64_t> cube_table(std::int64_t limit) {
    std::map<std::int64_t, std::int64_t> t;
    for (std::int64_t k = -limit; k <= limit; ++k) t[k * k * k] = k;
    return t;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Triple {
    std::int64_t a, b, c;
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Naive loops over the raw equations, direct integer arithmetic.

/// 2p(p^2+3q^2) = theta^3 with p+q odd, gcd(p,q)=1, by looping theta.
inline std::vector<Triple> naive_eq1(std::int64_t bound) {
    std::vector<Triple> hits;
    const std::int64_t tmax = 2 * bound + 2;  // |theta|^3 <= 8 bound^3
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q) {
            if (!p || !q || ((p + q) & 1) == 0 || gcd64(p, q) != 1) continue;
            const std::int64_t lhs = 2 * p * (p * p + 3 * q * q);
            for (std::int64_t t = -tmax; t <= tmax; ++t)
                if (t && t * t * t == lhs) hits.push_back({p, q, t});
        }
    return hits;
}

/// x^3 + y^3 + z^3 = 0, nonzero, 0 < |x| <= |y| <= bound, by looping z.
inline std::vector<Triple> naive_fermat(std::int64_t bound) {
    std::vector<Triple> hits;
    for (std::int64_t x = -bound; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= bound; ++y) {
            if (!x || !y || std::llabs(x) > std::llabs(y)) continue;
            for (std::int64_t z = -2 * bound; z <= 2 * bound; ++z)
                if (z && x * x * x + y * y * y + z * z * z == 0) hits.push_back({x, y, z});
        }
    return hits;
}

/// 12q^3 - 3p^6 = r^2, p != 0, r >= 0, by looping r.
inline std::vector<Triple> naive_square(std::int64_t bound) {
    std::vector<Triple> hits;
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q) {
            if (!p) continue;
            const __int128 v = 12 * static_cast<__int128>(q) * q * q - 3 * static_cast<__int128>(p) * p * p * p * p * p;
            if (v < 0) continue;
            for (std::int64_t r = 0; static_cast<__int128>(r) * r <= v; ++r)
                if (static_cast<__int128>(r) * r == v) hits.push_back({p, q, r});
        }
    return hits;
}

/// 9x^3 = zy^3 + z^2 + 6xyz over nonzero x, y, z.
inline std::vector<Triple> naive_app2(std::int64_t bound) {
    std::vector<Triple> hits;
    for (std::int64_t x = -bound; x <= bound; ++x)
        for (std::int64_t y = -bound; y <= bound; ++y)
            for (std::int64_t z = -bound; z <= bound; ++z)
                if (x && y && z && 9 * x * x * x == z * y * y * y + z * z + 6 * x * y * z) hits.push_back({x, y, z});
    return hits;
}

/// (a+b+c)^3 = 24abc over nonzero a, b, c.
inline std::vector<Triple> naive_app3(std::int64_t bound) {
    std::vector<Triple> hits;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c) {
                const std::int64_t s = a + b + c;
                if (a && b && c && s * s * s == 24 * a * b * c) hits.push_back({a, b, c});
            }
    return hits;
}

}  // namespace oracle
