#pragma once

// Arbitrary-precision integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eisen {

using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Sign of |a| - |b|.
inline int cmp_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }
inline bool is_even(const Integer& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

inline bool divisible(const Integer& a, const Integer& d) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees d | a.
inline Integer exact_div(const Integer& a, const Integer& d) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Integer pow(const Integer& a, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

inline Integer cube(const Integer& a) { return a * a * a; }

/// Floor square root of a non-negative integer.
inline Integer isqrt(const Integer& a) {
    if (sgn(a) < 0) throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Non-negative root when `a` is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& a) {
    if (sgn(a) < 0) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
    if (sgn(rem) != 0) return std::nullopt;
    return r;
}

/// Rounds num/den to the nearest integer, ties toward zero. den > 0.
inline Integer round_div_ties_to_zero(const Integer& num, const Integer& den) {
    Integer mag = abs(num);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());
    if (2 * r > den) ++q;
    return sgn(num) < 0 ? Integer(-q) : q;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

/// Parses a base-10 integer with optional sign; rejects anything else.
inline std::optional<Integer> parse_integer(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) return std::nullopt;
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9') return std::nullopt;
    Integer v;
    if (v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) return std::nullopt;
    return v;
}

/// Deterministic trial-division primality.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (is_even(n)) return false;
    if (divisible(n, 3)) return n == 3;
    for (Integer d = 5; d * d <= n; d += 6) {
        if (divisible(n, d) || divisible(n, d + 2)) return false;
    }
    return true;
}

using PrimeFactorization = std::vector<std::pair<Integer, unsigned>>;

/// Trial-division factorization of n >= 1, primes ascending.
inline PrimeFactorization factor_integer(Integer n) {
    if (n < 1) throw std::domain_error("factor_integer expects n >= 1");
    PrimeFactorization out;
    auto strip = [&](const Integer& d) {
        unsigned e = 0;
        while (divisible(n, d)) {
            n = exact_div(n, d);
            ++e;
        }
        if (e) out.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    for (Integer d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace eisen
