#pragma once

// Prime elements of A chosen inside Z[sqrt(-3)] ("atoms"), representation
// of primes p = 1 (mod 6) as r^2 + 3s^2, and factorization z = unit * atoms.

#include "eisen/error.hpp"
#include "eisen/integer.hpp"
#include "eisen/ring.hpp"
#include "eisen/text.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace eisen {

enum class AtomKind { Two, Inert, Ramified, Split };

constexpr std::string_view atom_kind_name(AtomKind k) {
    switch (k) {
        case AtomKind::Two: return "two";
        case AtomKind::Inert: return "inert";
        case AtomKind::Ramified: return "ramified";
        case AtomKind::Split: return "split";
    }
    return "?";
}

struct PrimeRepresentation {
    Integer p;
    Integer r;
    Integer s;
};

namespace detail {

inline void require_prime(const Integer& p) {
    if (!is_prime(p)) throw DomainError(ErrorCode::NotPrime, to_string(p) + " is not prime");
}

inline Integer mod6(const Integer& p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), p.get_mpz_t(), 6);
    return r;
}

}  // namespace detail

/// Unique (r, s) with r, s >= 1 and r^2 + 3s^2 = p, found by scanning s.
inline PrimeRepresentation represent_6k1_prime(const Integer& p) {
    detail::require_prime(p);
    if (detail::mod6(p) != 1)
        throw DomainError(ErrorCode::BadResidue, to_string(p) + " is not 1 mod 6");
    std::optional<PrimeRepresentation> found;
    const Integer limit = isqrt(p / 3);
    for (Integer s = 1; s <= limit; ++s) {
        if (auto r = exact_sqrt(p - 3 * s * s); r && sgn(*r) > 0) {
            ensure(!found, "RepresentationUniqueness", [&] { return "two representations of " + to_string(p); });
            found = PrimeRepresentation{p, *r, s};
        }
    }
    ensure(found.has_value(), "RepresentationExistence", [&] { return "no r^2+3s^2 form for " + to_string(p); });
    return *found;
}

struct Atom {
    AtomKind kind = AtomKind::Two;
    Integer p = 2;
    Integer r = 0;  // split atoms only
    Integer s = 0;  // split atoms only
    bool bar = false;

    static Atom two() { return Atom{}; }

    static Atom ramified() { return Atom{AtomKind::Ramified, 3, 0, 0, false}; }

    static Atom inert(const Integer& p) {
        detail::require_prime(p);
        if (detail::mod6(p) != 5) throw DomainError(ErrorCode::BadResidue, to_string(p) + " is not 5 mod 6");
        return Atom{AtomKind::Inert, p, 0, 0, false};
    }

    static Atom split(const PrimeRepresentation& rep, bool bar) {
        if (rep.r < 1 || rep.s < 1 || rep.r * rep.r + 3 * rep.s * rep.s != rep.p)
            throw DomainError(ErrorCode::PreconditionError, "r^2+3s^2 != p for split atom");
        return Atom{AtomKind::Split, rep.p, rep.r, rep.s, bar};
    }

    /// r+s*sqrt(-3), or its conjugate when `bar`.
    EisensteinInt element() const {
        switch (kind) {
            case AtomKind::Two: return EisensteinInt::from_integer(2);
            case AtomKind::Inert: return EisensteinInt::from_integer(p);
            case AtomKind::Ramified: return sqrt_minus3();
            case AtomKind::Split: return EisensteinInt::from_zsqrt3(r, bar ? Integer(-s) : s);
        }
        return {};
    }

    Integer norm_contribution() const {
        switch (kind) {
            case AtomKind::Two: return 4;
            case AtomKind::Inert: return p * p;
            case AtomKind::Ramified: return 3;
            case AtomKind::Split: return p;
        }
        return 0;
    }

    friend bool operator==(const Atom& x, const Atom& y) {
        return x.kind == y.kind && x.p == y.p && x.r == y.r && x.s == y.s && x.bar == y.bar;
    }

    // Canonical multiset order: prime, then kind, then orientation.
    friend bool operator<(const Atom& x, const Atom& y) {
        if (x.p != y.p) return x.p < y.p;
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.bar < y.bar;
    }
};

inline std::string to_string(const Atom& a) {
    switch (a.kind) {
        case AtomKind::Two: return "2";
        case AtomKind::Inert: return to_string(a.p);
        case AtomKind::Ramified: return std::string(kSqrtMinus3);
        case AtomKind::Split: return to_string(a.element());
    }
    return "?";
}

struct AtomicFactorization {
    Unit unit = Unit::PlusOne;
    std::vector<Atom> atoms;  // sorted

    EisensteinInt product() const {
        EisensteinInt z = unit_element(unit);
        for (const Atom& a : atoms) z *= a.element();
        return z;
    }

    Integer norm() const {
        Integer n = 1;
        for (const Atom& a : atoms) n *= a.norm_contribution();
        return n;
    }
};

/// How a rational prime decomposes: its own atomic factorization plus, for
/// split primes, the r^2 + 3s^2 representation.
struct RationalPrimeClass {
    AtomKind kind;
    Integer p;
    AtomicFactorization factorization;
    std::optional<PrimeRepresentation> representation;
};

inline RationalPrimeClass classify_rational_prime(const Integer& p) {
    detail::require_prime(p);
    if (p == 2) return {AtomKind::Two, p, {Unit::PlusOne, {Atom::two()}}, std::nullopt};
    // 3 = -(sqrt(-3))^2
    if (p == 3) return {AtomKind::Ramified, p, {Unit::MinusOne, {Atom::ramified(), Atom::ramified()}}, std::nullopt};
    if (detail::mod6(p) == 5) return {AtomKind::Inert, p, {Unit::PlusOne, {Atom::inert(p)}}, std::nullopt};
    PrimeRepresentation rep = represent_6k1_prime(p);
    return {AtomKind::Split, p, {Unit::PlusOne, {Atom::split(rep, false), Atom::split(rep, true)}}, rep};
}

inline const Integer& default_max_norm() {
    static const Integer bound("1000000000000");
    return bound;
}

/// z = unit * (product of atoms). Each rational prime of N(z) is matched to
/// its atom; for split primes an exact-divisibility test picks the
/// orientation per occurrence.
inline AtomicFactorization atomize(const EisensteinInt& z, const Integer& max_norm = default_max_norm()) {
    if (z.is_zero()) throw DomainError(ErrorCode::ZeroInput, "cannot factor 0");
    const Integer n = norm(z);
    if (n == 1) throw DomainError(ErrorCode::UnitInput, to_string(z) + " is a unit");
    if (n > max_norm)
        throw DomainError(ErrorCode::NormTooLarge,
                          "norm " + to_string(n) + " exceeds trial-division cap " + to_string(max_norm));

    AtomicFactorization out;
    EisensteinInt rest = z;
    auto strip = [&](const Atom& atom) {
        auto q = exact_quotient(rest, atom.element());
        ensure(q.has_value(), "AtomNotDividing",
               [&] { return to_string(atom) + " does not divide " + to_string(rest) + " (from z=" + to_string(z) + ")"; });
        rest = std::move(*q);
        out.atoms.push_back(atom);
    };

    for (const auto& [prime, exponent] : factor_integer(n)) {
        const Integer residue = detail::mod6(prime);
        if (prime == 2 || residue == 5) {
            ensure(exponent % 2 == 0, "NormParity",
                   [&] { return "odd exponent of " + to_string(prime) + " in N(" + to_string(z) + ")"; });
            const Atom atom = prime == 2 ? Atom::two() : Atom::inert(prime);
            for (unsigned i = 0; i < exponent / 2; ++i) strip(atom);
        } else if (prime == 3) {
            for (unsigned i = 0; i < exponent; ++i) strip(Atom::ramified());
        } else {
            const PrimeRepresentation rep = represent_6k1_prime(prime);
            const Atom lambda = Atom::split(rep, false), lambda_bar = Atom::split(rep, true);
            for (unsigned i = 0; i < exponent; ++i) strip(divides(lambda.element(), rest) ? lambda : lambda_bar);
        }
    }
    out.unit = unit_value(rest);
    std::sort(out.atoms.begin(), out.atoms.end());
    return out;
}

/// atom^multiplicity | z in A.
inline bool atom_divides(const Atom& atom, const EisensteinInt& z, unsigned multiplicity = 1) {
    if (z.is_zero()) throw DomainError(ErrorCode::ZeroInput, "divisibility of 0 is trivial");
    EisensteinInt d = EisensteinInt::from_integer(1);
    for (unsigned i = 0; i < multiplicity; ++i) d *= atom.element();
    return divides(d, z);
}

namespace detail {

inline void require_nonzero_coprime_odd_sum(const Integer& a, const Integer& b) {
    if (sgn(a) == 0 || sgn(b) == 0) throw DomainError(ErrorCode::PreconditionError, "zero");
    if (is_even(a + b)) throw DomainError(ErrorCode::PreconditionError, "parity");
    if (gcd(a, b) != 1) throw DomainError(ErrorCode::PreconditionError, "coprimality");
}

}  // namespace detail

/// Prime factorization of a^2 + 3b^2 for nonzero coprime (a, b) with a+b
/// odd. Such a norm has no factor 2, no prime 5 (mod 6), and 3 at most once.
inline PrimeFactorization p1_profile(const Integer& a, const Integer& b) {
    detail::require_nonzero_coprime_odd_sum(a, b);
    PrimeFactorization f = factor_integer(a * a + 3 * b * b);
    for (const auto& [prime, exponent] : f) {
        auto witness = [&] { return "a=" + to_string(a) + " b=" + to_string(b) + " prime " + to_string(prime); };
        ensure(prime != 2, "NormPrimeProfile", witness);
        ensure(detail::mod6(prime) != 5, "NormPrimeProfile", witness);
        ensure(prime != 3 || exponent <= 1, "NormPrimeProfile", witness);
    }
    return f;
}

/// Whether p = lambda * conj(lambda) divides a + b*sqrt(-3); never for
/// coprime (a, b).
inline bool p2_check(const Integer& p, const Integer& a, const Integer& b) {
    detail::require_prime(p);
    if (detail::mod6(p) != 1) throw DomainError(ErrorCode::BadResidue, to_string(p) + " is not 1 mod 6");
    if (gcd(a, b) != 1) throw DomainError(ErrorCode::PreconditionError, "coprimality");
    const bool hit = divides(EisensteinInt::from_integer(p), EisensteinInt::from_zsqrt3(a, b));
    ensure(!hit, "SplitPrimeDivides", [&] { return to_string(p) + " divides " + to_string(a) + "+" + to_string(b) + "√-3"; });
    return hit;
}

}  // namespace eisen
