#pragma once

// Integer cube detection and cube roots in Z[sqrt(-3)]:
// a + b*sqrt(-3) = (e + f*sqrt(-3))^3 with a = e(e^2-9f^2), b = 3f(e^2-f^2).

#include "eisen/atoms.hpp"
#include "eisen/error.hpp"
#include "eisen/integer.hpp"

#include <optional>
#include <string>

namespace eisen {

struct CubeRoot {
    Integer root;
    Integer cube;
};

/// Exact integer cube root when n is a perfect cube (negative n allowed).
inline std::optional<CubeRoot> is_perfect_cube(const Integer& n) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
    return CubeRoot{root, n};
}

struct LemmaExpansion {
    Integer a;
    Integer b;
    bool degenerate;  // b == 0
};

/// Coordinates of (e + f*sqrt(-3))^3.
inline LemmaExpansion lemma_expand(const Integer& e, const Integer& f) {
    Integer a = e * (e * e - 9 * f * f);
    Integer b = 3 * f * (e * e - f * f);
    const bool degenerate = sgn(b) == 0;
    return {std::move(a), std::move(b), degenerate};
}

struct LemmaWitness {
    Integer e;
    Integer f;
    Integer a;
    Integer b;
};

/// The unique (e, f) with (e + f*sqrt(-3))^3 = a + b*sqrt(-3), for nonzero
/// coprime (a, b), a + b odd, a^2 + 3b^2 a cube c^3. Candidates come from
/// e^2 + 3f^2 = c.
inline LemmaWitness cube_root_in_zsqrt3(const Integer& a, const Integer& b) {
    detail::require_nonzero_coprime_odd_sum(a, b);
    const Integer n = a * a + 3 * b * b;
    auto c = is_perfect_cube(n);
    if (!c) throw DomainError(ErrorCode::NotACube, to_string(n) + " = a^2+3b^2 is not a cube");

    auto witness_text = [&] { return "a=" + to_string(a) + " b=" + to_string(b); };
    std::optional<LemmaWitness> found;
    const Integer limit = isqrt(c->root / 3);
    for (Integer f = -limit; f <= limit; ++f) {
        auto e = exact_sqrt(c->root - 3 * f * f);
        if (!e) continue;
        for (const Integer& signed_e : {Integer(*e), Integer(-*e)}) {
            const LemmaExpansion x = lemma_expand(signed_e, f);
            if (x.a != a || x.b != b) continue;
            if (found && found->e == signed_e && found->f == f) continue;  // e = 0
            ensure(!found, "CubeRootUniqueness", witness_text);
            found = LemmaWitness{signed_e, f, a, b};
        }
    }
    ensure(found.has_value(), "NoWitness", witness_text);
    ensure(sgn(found->e) != 0 && sgn(found->f) != 0, "LemmaNonzero", witness_text);
    ensure(divisible(b, 3), "LemmaThreeDividesB", witness_text);
    return *found;
}

}  // namespace eisen
