#pragma once

// Arithmetic in A = Z[w], w = (-1+sqrt(-3))/2, stored in half-coordinates:
// the pair (m, n) denotes (m + n*sqrt(-3))/2 with m = n (mod 2).

#include "eisen/error.hpp"
#include "eisen/integer.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace eisen {

class EisensteinInt {
public:
    EisensteinInt() = default;

    /// (m + n*sqrt(-3))/2; throws ParityError when m + n is odd.
    static EisensteinInt make(Integer m, Integer n) {
        if (is_odd(m + n))
            throw DomainError(ErrorCode::ParityError,
                              "(" + to_string(m) + "+" + to_string(n) + "*sqrt(-3))/2 is not in A: m+n is odd");
        return EisensteinInt(std::move(m), std::move(n));
    }

    /// a + b*sqrt(-3).
    static EisensteinInt from_zsqrt3(const Integer& a, const Integer& b) { return EisensteinInt(2 * a, 2 * b); }

    static EisensteinInt from_integer(const Integer& a) { return EisensteinInt(2 * a, 0); }

    const Integer& m() const noexcept { return m_; }
    const Integer& n() const noexcept { return n_; }

    bool is_zero() const { return sgn(m_) == 0 && sgn(n_) == 0; }

    /// True when the element lies in Z[sqrt(-3)].
    bool in_zsqrt3() const { return is_even(m_); }

    /// (a, b) with element = a + b*sqrt(-3), when in Z[sqrt(-3)].
    std::optional<std::pair<Integer, Integer>> zsqrt3() const {
        if (!in_zsqrt3()) return std::nullopt;
        return std::pair<Integer, Integer>(m_ / 2, n_ / 2);
    }

    /// Coordinates (c0, c1) in the basis {1, w}.
    std::pair<Integer, Integer> omega_basis() const { return {(m_ + n_) / 2, n_}; }

    static EisensteinInt from_omega_basis(const Integer& c0, const Integer& c1) {
        return EisensteinInt(2 * c0 - c1, c1);
    }

    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
        return EisensteinInt(x.m_ + y.m_, x.n_ + y.n_);
    }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
        return EisensteinInt(x.m_ - y.m_, x.n_ - y.n_);
    }
    friend EisensteinInt operator-(const EisensteinInt& x) { return EisensteinInt(-x.m_, -x.n_); }

    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        Integer re = x.m_ * y.m_ - 3 * x.n_ * y.n_;
        Integer im = x.m_ * y.n_ + x.n_ * y.m_;
        return EisensteinInt(exact_div(re, 2), exact_div(im, 2));
    }

    EisensteinInt& operator+=(const EisensteinInt& y) { return *this = *this + y; }
    EisensteinInt& operator-=(const EisensteinInt& y) { return *this = *this - y; }
    EisensteinInt& operator*=(const EisensteinInt& y) { return *this = *this * y; }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.m_ == y.m_ && x.n_ == y.n_;
    }

private:
    EisensteinInt(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {
#ifndef NDEBUG
        if (is_odd(m_ + n_)) throw TheoremViolation("ParityInvariant", "internal element with m+n odd");
#endif
    }

    Integer m_ = 0;
    Integer n_ = 0;
};

inline EisensteinInt neg(const EisensteinInt& x) { return -x; }

inline EisensteinInt conj(const EisensteinInt& x) { return EisensteinInt::make(x.m(), -x.n()); }

/// N((m + n*sqrt(-3))/2) = (m^2 + 3n^2)/4.
inline Integer norm(const EisensteinInt& x) { return exact_div(x.m() * x.m() + 3 * x.n() * x.n(), 4); }

inline const EisensteinInt& omega() {
    static const EisensteinInt w = EisensteinInt::make(-1, 1);
    return w;
}

inline const EisensteinInt& sqrt_minus3() {
    static const EisensteinInt r = EisensteinInt::from_zsqrt3(0, 1);
    return r;
}

// --- units -----------------------------------------------------------------

enum class Unit { PlusOne, MinusOne, PlusOmega, MinusOmega, PlusOmega2, MinusOmega2 };

inline constexpr std::array<Unit, 6> all_units{Unit::PlusOne,   Unit::MinusOne,   Unit::PlusOmega,
                                               Unit::MinusOmega, Unit::PlusOmega2, Unit::MinusOmega2};

constexpr std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::PlusOne: return "+1";
        case Unit::MinusOne: return "-1";
        case Unit::PlusOmega: return "+w";
        case Unit::MinusOmega: return "-w";
        case Unit::PlusOmega2: return "+w2";
        case Unit::MinusOmega2: return "-w2";
    }
    return "?";
}

inline std::optional<Unit> parse_unit(std::string_view text) {
    for (Unit u : all_units)
        if (unit_name(u) == text) return u;
    return std::nullopt;
}

inline EisensteinInt unit_element(Unit u) {
    switch (u) {
        case Unit::PlusOne: return EisensteinInt::make(2, 0);
        case Unit::MinusOne: return EisensteinInt::make(-2, 0);
        case Unit::PlusOmega: return EisensteinInt::make(-1, 1);
        case Unit::MinusOmega: return EisensteinInt::make(1, -1);
        case Unit::PlusOmega2: return EisensteinInt::make(-1, -1);
        case Unit::MinusOmega2: return EisensteinInt::make(1, 1);
    }
    return {};
}

inline bool is_unit(const EisensteinInt& x) { return norm(x) == 1; }

inline Unit unit_value(const EisensteinInt& x) {
    if (is_unit(x)) {
        for (Unit u : all_units)
            if (unit_element(u) == x) return u;
    }
    throw DomainError(ErrorCode::NotAUnit, "norm " + to_string(norm(x)) + " != 1");
}

inline Unit operator*(Unit a, Unit b) { return unit_value(unit_element(a) * unit_element(b)); }

inline Unit inverse(Unit u) { return unit_value(conj(unit_element(u))); }

// --- Euclidean structure ---------------------------------------------------

struct DivResult {
    EisensteinInt quotient;
    EisensteinInt remainder;
};

/// x = q*d + r with N(r) < N(d). q rounds the exact quotient's {1, w}
/// coordinates to the nearest integer, ties toward zero.
inline DivResult euclid_div(const EisensteinInt& x, const EisensteinInt& d) {
    if (d.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "divisor is zero");
    const Integer nd = norm(d);
    const auto [c0, c1] = (x * conj(d)).omega_basis();
    EisensteinInt q = EisensteinInt::from_omega_basis(round_div_ties_to_zero(c0, nd), round_div_ties_to_zero(c1, nd));
    EisensteinInt r = x - q * d;
    ensure(norm(r) < nd, "EuclideanContract", [&] { return "N(r) >= N(d)"; });
    return {std::move(q), std::move(r)};
}

/// x / d when d divides x exactly in A.
inline std::optional<EisensteinInt> exact_quotient(const EisensteinInt& x, const EisensteinInt& d) {
    if (d.is_zero()) throw DomainError(ErrorCode::DivisionByZero, "divisor is zero");
    const Integer nd = norm(d);
    EisensteinInt w = x * conj(d);
    if (!divisible(w.m(), nd) || !divisible(w.n(), nd)) return std::nullopt;
    Integer m = exact_div(w.m(), nd), n = exact_div(w.n(), nd);
    if (is_odd(m + n)) return std::nullopt;
    return EisensteinInt::make(std::move(m), std::move(n));
}

inline bool divides(const EisensteinInt& d, const EisensteinInt& x) { return exact_quotient(x, d).has_value(); }

/// The associate of z lying in Z[sqrt(-3)] with the largest (a, b), read
/// lexicographically: a positive rational part whenever one exists, and
/// positive rational integers for rational inputs.
inline EisensteinInt canonical_associate(const EisensteinInt& z) {
    if (z.is_zero()) return z;
    std::optional<EisensteinInt> best;
    for (Unit u : all_units) {
        EisensteinInt c = unit_element(u) * z;
        if (!c.in_zsqrt3()) continue;
        if (!best || c.m() > best->m() || (c.m() == best->m() && c.n() > best->n())) best = std::move(c);
    }
    return *best;
}

/// Unit u with u * canonical_associate(z) == z.
inline Unit associate_unit(const EisensteinInt& z) {
    const EisensteinInt c = canonical_associate(z);
    for (Unit u : all_units)
        if (unit_element(u) * c == z) return u;
    throw TheoremViolation("AssociateUnit", "no unit relates z to its canonical associate");
}

inline EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero()) throw DomainError(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        EisensteinInt r = euclid_div(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x);
}

}  // namespace eisen
