#pragma once

// The equation 2p(p^2+3q^2) = theta^3 (p+q odd, gcd(p,q)=1), the stages
// of the descent that maps a solution (p,q,theta) to a smaller one
// (alpha,beta,t), the reduction from x^3+y^3+z^3=0, and bounded searches.
//
// Every stage accepts inputs satisfying only its own local preconditions,
// so each success path can be exercised even though the composed pipeline
// has no valid input.

#include "eisen/cubes.hpp"
#include "eisen/error.hpp"
#include "eisen/integer.hpp"
#include "eisen/search.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace eisen {

struct DescentState {
    Integer p;
    Integer q;
    Integer theta;
};

inline Integer eq1_lhs(const Integer& p, const Integer& q) { return 2 * p * (p * p + 3 * q * q); }

/// Validated state. Checks run in the order zero, equation, coprimality,
/// parity.
inline DescentState make_state(const Integer& p, const Integer& q, const Integer& theta) {
    if (sgn(p) == 0 || sgn(q) == 0 || sgn(theta) == 0)
        throw DomainError(ErrorCode::ZeroError, "p, q and theta must be nonzero");
    if (eq1_lhs(p, q) != cube(theta))
        throw DomainError(ErrorCode::EquationError, "2p(p^2+3q^2) != theta^3");
    if (gcd(p, q) != 1) throw DomainError(ErrorCode::CoprimalityError, "gcd(p,q) = " + to_string(gcd(p, q)));
    if (is_even(p + q)) throw DomainError(ErrorCode::ParityError, "p+q is even");
    return {p, q, theta};
}

struct P4Facts {
    bool q_odd = false;
    bool nine_divides_p = false;
    bool three_divides_theta = false;
    bool three_ndivides_q = false;

    bool all() const { return q_odd && nine_divides_p && three_divides_theta && three_ndivides_q; }
};

/// The four facts, computed without asserting them.
inline P4Facts p4_facts(const Integer& p, const Integer& q, const Integer& theta) {
    return {is_odd(q), divisible(p, 9), divisible(theta, 3), !divisible(q, 3)};
}

inline std::string describe(const DescentState& s) {
    return "p=" + to_string(s.p) + " q=" + to_string(s.q) + " theta=" + to_string(s.theta);
}

/// Facts for a valid state; a false fact is a theorem violation.
inline P4Facts check_p4(const DescentState& state) {
    const P4Facts f = p4_facts(state.p, state.q, state.theta);
    ensure(f.all(), "DescentDivisibility", [&] { return describe(state); });
    return f;
}

struct CubeSplit {
    Integer u;
    Integer v;
};

/// (2p/9) * ((p^2+3q^2)/3) = (theta/3)^3 split into u^3 * v^3.
/// Requires 9 | p, 2p(p^2+3q^2) = theta^3 and 3 | theta, checked in that
/// order. 3 | q is tolerated so that the
/// (p, p, 2p) family can exercise the success path.
inline CubeSplit split_eq2(const Integer& p, const Integer& q, const Integer& theta) {
    if (sgn(p) == 0 || sgn(q) == 0 || sgn(theta) == 0)
        throw DomainError(ErrorCode::ZeroError, "p, q and theta must be nonzero");
    if (!divisible(p, 9)) throw DomainError(ErrorCode::DivisibilityError, "9 does not divide p");
    if (eq1_lhs(p, q) != cube(theta)) throw DomainError(ErrorCode::EquationError, "2p(p^2+3q^2) != theta^3");
    if (!divisible(theta, 3)) throw DomainError(ErrorCode::DivisibilityError, "3 does not divide theta");

    const Integer left = exact_div(2 * p, 9);
    const Integer right = exact_div(p * p + 3 * q * q, 3);
    if (gcd(p, q) == 1)
        ensure(gcd(left, right) == 1, "SplitFactorsCoprime", [&] { return "p=" + to_string(p) + " q=" + to_string(q); });
    auto u = is_perfect_cube(left);
    if (!u) throw DomainError(ErrorCode::NotACube, "2p/9 = " + to_string(left) + " is not a cube");
    auto v = is_perfect_cube(right);
    if (!v) throw DomainError(ErrorCode::NotACube, "(p^2+3q^2)/3 = " + to_string(right) + " is not a cube");
    ensure(u->root * v->root * 3 == theta, "SplitProduct", [&] { return "uv != theta/3"; });
    return {u->root, v->root};
}

/// (e, f) with q = e(e^2-9f^2) and p/3 = 3f(e^2-f^2), given
/// q^2 + 3(p/3)^2 = v^3. When q is odd, e is odd and f even.
inline LemmaWitness apply_lemma_eq56(const Integer& q, const Integer& p_third, const Integer& v) {
    if (q * q + 3 * p_third * p_third != cube(v))
        throw DomainError(ErrorCode::EquationError, "q^2+3(p/3)^2 != v^3");
    if (is_even(q + p_third)) throw DomainError(ErrorCode::ParityError, "q + p/3 is even");
    LemmaWitness w = cube_root_in_zsqrt3(q, p_third);
    auto witness = [&] { return "q=" + to_string(q) + " p/3=" + to_string(p_third); };
    ensure(gcd(w.e, w.f) == 1, "LemmaRootCoprime", witness);
    if (is_odd(q)) ensure(is_odd(w.e) && is_even(w.f), "LemmaRootParity", witness);
    return w;
}

/// Cube roots of pairwise coprime factors whose product is a cube.
inline std::vector<Integer> coprime_cube_split(std::span<const Integer> factors) {
    Integer product = 1;
    for (const Integer& f : factors) {
        if (sgn(f) == 0) throw DomainError(ErrorCode::ZeroError, "zero factor");
        product *= f;
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (gcd(factors[i], factors[j]) != 1)
                throw DomainError(ErrorCode::NotCoprime,
                                  to_string(factors[i]) + " and " + to_string(factors[j]) + " share a factor");
    if (!is_perfect_cube(product))
        throw DomainError(ErrorCode::ProductNotCube, to_string(product) + " is not a cube");
    std::vector<Integer> roots;
    roots.reserve(factors.size());
    for (const Integer& f : factors) {
        auto c = is_perfect_cube(f);
        ensure(c.has_value(), "FactorNotCube", [&] { return to_string(f) + " is a coprime factor of a cube"; });
        roots.push_back(c->root);
    }
    return roots;
}

struct AlphaBeta {
    Integer alpha;
    Integer beta;
    bool degenerate;  // alpha == 0 or beta == 0
};

/// alpha = (r-s)/2, beta = (r+s)/2 for odd coprime r, s; then
/// r^3 - s^3 = 2 alpha (alpha^2 + 3 beta^2).
inline AlphaBeta alpha_beta(const Integer& r, const Integer& s) {
    if (is_even(r) || is_even(s)) throw DomainError(ErrorCode::ParityError, "r and s must be odd");
    if (gcd(r, s) != 1) throw DomainError(ErrorCode::CoprimalityError, "gcd(r,s) != 1");
    Integer alpha = (r - s) / 2, beta = (r + s) / 2;
    auto witness = [&] { return "r=" + to_string(r) + " s=" + to_string(s); };
    ensure(cube(r) - cube(s) == eq1_lhs(alpha, beta), "AlphaBetaIdentity", witness);
    ensure(is_odd(alpha + beta), "AlphaBetaParity", witness);
    ensure(gcd(alpha, beta) == 1, "AlphaBetaCoprime", witness);
    const bool degenerate = sgn(alpha) == 0 || sgn(beta) == 0;
    return {std::move(alpha), std::move(beta), degenerate};
}

enum class DescentMode { Strict, Relaxed };

struct DescentChain {
    DescentState input;
    P4Facts facts;
    CubeSplit split;
    LemmaWitness lemma;
    std::vector<Integer> roots;  // r, s, t
    AlphaBeta ab;
    DescentState next;
};

inline std::string describe(const DescentChain& c) {
    std::ostringstream os;
    os << describe(c.input) << "; u=" << c.split.u << " v=" << c.split.v << "; e=" << c.lemma.e << " f=" << c.lemma.f
       << "; r=" << c.roots[0] << " s=" << c.roots[1] << " t=" << c.roots[2] << "; alpha=" << c.ab.alpha
       << " beta=" << c.ab.beta << "; next " << describe(c.next);
    return os.str();
}

namespace detail {

template <class Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const DomainError& e) {
        throw e.at_stage(name);
    }
}

}  // namespace detail

/// Runs the full descent on (p, q, theta). Strict mode validates the state
/// and treats a completed chain as a theorem violation. Relaxed mode skips
/// state validation and the divisibility assertion and returns whatever completes.
inline DescentChain descent_chain(const Integer& p, const Integer& q, const Integer& theta, DescentMode mode) {
    DescentChain c;
    if (mode == DescentMode::Strict) {
        c.input = detail::stage("make_state", [&] { return make_state(p, q, theta); });
        c.facts = check_p4(c.input);
    } else {
        c.input = {p, q, theta};
        c.facts = p4_facts(p, q, theta);
    }
    c.split = detail::stage("split_eq2", [&] { return split_eq2(p, q, theta); });
    c.lemma = detail::stage("apply_lemma_eq56", [&] { return apply_lemma_eq56(q, exact_div(p, 3), c.split.v); });
    const std::array<Integer, 3> factors{c.lemma.e + c.lemma.f, c.lemma.e - c.lemma.f, 2 * c.lemma.f};
    c.roots = detail::stage("coprime_cube_split", [&] { return coprime_cube_split(factors); });
    ensure(c.roots[0] * c.roots[1] * c.roots[2] == c.split.u, "DescentRstU", [&] { return describe(c.input); });
    c.ab = detail::stage("alpha_beta", [&] { return alpha_beta(c.roots[0], c.roots[1]); });
    c.next = {c.ab.alpha, c.ab.beta, c.roots[2]};
    ensure(eq1_lhs(c.next.p, c.next.q) == cube(c.next.theta), "DescentEquation", [&] { return describe(c); });
    ensure(cmp_abs(c.next.theta, theta) < 0, "DescentShrinkage", [&] { return describe(c); });
    if (mode == DescentMode::Strict) throw TheoremViolation("DescentSuccess", describe(c));
    return c;
}

/// One descent step from a valid state. A valid state cannot exist, so
/// this only ever reports a stage error or a theorem violation.
inline DescentState descent_step(const DescentState& state) {
    return descent_chain(state.p, state.q, state.theta, DescentMode::Strict).next;
}

struct FermatReduction {
    Integer p;
    Integer q;
    Integer cube_sum;  // x^3 + y^3 = 2p(p^2+3q^2)
};

/// p = (x+y)/2, q = (x-y)/2 for odd coprime x != y.
inline FermatReduction fermat_reduce(const Integer& x, const Integer& y) {
    if (is_even(x) || is_even(y)) throw DomainError(ErrorCode::ParityError, "x and y must be odd");
    if (gcd(x, y) != 1) throw DomainError(ErrorCode::CoprimalityError, "gcd(x,y) != 1");
    if (x == y) throw DomainError(ErrorCode::EqualityError, "x = y");
    FermatReduction r{(x + y) / 2, (x - y) / 2, cube(x) + cube(y)};
    ensure(r.cube_sum == eq1_lhs(r.p, r.q), "CorollaryIdentity",
           [&] { return "x=" + to_string(x) + " y=" + to_string(y); });
    return r;
}

/// The state (p, q, -z) of 2p(p^2+3q^2) = theta^3 for a solution of x^3 + y^3 + z^3 = 0.
inline DescentState fermat_reduce(const Integer& x, const Integer& y, const Integer& z) {
    const FermatReduction r = fermat_reduce(x, y);
    if (r.cube_sum != -cube(z)) throw DomainError(ErrorCode::EquationError, "x^3+y^3 != (-z)^3");
    return make_state(r.p, r.q, -z);
}

// --- searches --------------------------------------------------------------

struct SearchOptions {
    std::int64_t bound = 1;
    unsigned jobs = 1;
    bool relaxed = false;
};

/// All (p, q), 0 < |p|,|q| <= bound, with 2p(p^2+3q^2) a cube. Parity and
/// coprimality filters apply unless relaxed.
inline SearchReport search_eq1(const SearchOptions& opt) {
    SearchReport report;
    report.target = "eq1";
    report.bound = opt.bound;
    report.constraints = {{"nonzero", true}, {"parity", !opt.relaxed}, {"coprime", !opt.relaxed}};
    report.fields = {"p", "q", "theta"};
    const auto values = magnitude_order(opt.bound);
    run_partitioned(report, values, opt.jobs, 2, [&](std::int64_t pv, SearchShard& shard) {
        const Integer p = pv;
        for (std::int64_t qv : values) {
            if (!opt.relaxed && ((pv + qv) % 2 == 0 || std::gcd(pv, qv) != 1)) continue;
            const Integer q = qv;
            ++shard.tested;
            if (auto c = is_perfect_cube(eq1_lhs(p, q))) shard.hits.push_back({p, q, c->root});
        }
    });
    return report;
}

/// All 0 < |x| <= |y| <= bound with -(x^3+y^3) a nonzero cube (relaxed:
/// zero allowed).
inline SearchReport search_fermat(const SearchOptions& opt) {
    SearchReport report;
    report.target = "fermat";
    report.bound = opt.bound;
    report.constraints = {{"nonzero", !opt.relaxed}};
    report.fields = {"x", "y", "z"};
    const auto values = magnitude_order(opt.bound);
    run_partitioned(report, values, opt.jobs, 2, [&](std::int64_t xv, SearchShard& shard) {
        const Integer x = xv;
        for (std::int64_t yv : values) {
            if (std::abs(yv) < std::abs(xv)) continue;
            ++shard.tested;
            const Integer y = yv;
            auto c = is_perfect_cube(-(cube(x) + cube(y)));
            if (c && (opt.relaxed || sgn(c->root) != 0)) shard.hits.push_back({x, y, c->root});
        }
    });
    return report;
}

}  // namespace eisen
