#pragma once

// Three equations reduced to the cubic Fermat equation, the polynomial
// identities linking them, a seeded identity fuzzer and bounded searches.

#include "eisen/cubes.hpp"
#include "eisen/error.hpp"
#include "eisen/integer.hpp"
#include "eisen/search.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace eisen {

inline Integer discriminant(const Integer& p, const Integer& q) { return 12 * cube(q) - 3 * pow(p, 6); }

/// r >= 0 with r^2 = 12q^3 - 3p^6, if any. Only q = p^2 (r = 3|p|^3)
/// should ever produce one.
inline std::optional<Integer> square_discriminant(const Integer& p, const Integer& q) {
    if (sgn(p) == 0) throw DomainError(ErrorCode::PreconditionError, "p is zero");
    return exact_sqrt(discriminant(p, q));
}

struct FermatTriple {
    Integer x;
    Integer y;
    Integer z;
};

/// x = 3p^3 + r, y = 3p^3 - r, z = 6pq, which satisfy x^3 + y^3 = z^3.
/// A nondegenerate result would be a Fermat solution and is reported as a
/// theorem violation; q = p^2 surfaces as DegenerateError.
inline FermatTriple app1_construct(const Integer& p, const Integer& q, const Integer& r) {
    if (sgn(p) == 0 || sgn(q) == 0) throw DomainError(ErrorCode::PreconditionError, "p and q must be nonzero");
    if (r * r != discriminant(p, q)) throw DomainError(ErrorCode::PreconditionError, "r^2 != 12q^3-3p^6");
    const Integer u = 3 * cube(p);
    FermatTriple t{u + r, u - r, 6 * p * q};
    auto witness = [&] { return "p=" + to_string(p) + " q=" + to_string(q) + " r=" + to_string(r); };
    ensure(cube(t.x) + cube(t.y) == 2 * cube(u) + 6 * u * r * r, "CubeSumIdentity", witness);
    ensure(cube(t.x) + cube(t.y) == cube(t.z), "App1Collapse", witness);
    if (sgn(t.x) == 0 || sgn(t.y) == 0 || sgn(t.z) == 0)
        throw DomainError(ErrorCode::DegenerateError, "x, y or z is zero (q = p^2)");
    throw TheoremViolation("FermatSolution", witness() + " gives x=" + to_string(t.x) + " y=" + to_string(t.y) +
                                                 " z=" + to_string(t.z));
}

struct App2Reduction {
    Integer p;
    Integer q;
    Integer r;
    Integer residual;  // 9x^3 - zy^3 - z^2 - 6xyz
    bool hypothesis_met;  // x, y, z all nonzero
};

inline Integer app2_residual(const Integer& x, const Integer& y, const Integer& z) {
    return 9 * cube(x) - z * cube(y) - z * z - 6 * x * y * z;
}

/// p = y, q = y^2 + 3x, r = 3(y^3 + 6xy + 2z); 12q^3 - 3p^6 - r^2 equals
/// 36 * residual identically.
inline App2Reduction app2_reduce(const Integer& x, const Integer& y, const Integer& z) {
    App2Reduction out{y, y * y + 3 * x, 3 * (cube(y) + 6 * x * y + 2 * z), app2_residual(x, y, z),
                      sgn(x) != 0 && sgn(y) != 0 && sgn(z) != 0};
    auto witness = [&] { return "x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z); };
    ensure(discriminant(out.p, out.q) - out.r * out.r == 36 * out.residual, "App2Linkage", witness);
    if (sgn(x) != 0 && sgn(y) != 0) ensure(sgn(out.p) != 0 && out.q - out.p * out.p == 3 * x, "App2QNotP2", witness);
    return out;
}

struct App3Reduction {
    Integer r;
    Integer s;
    Integer t;
    Integer lhs7;  // (a+b+c)^3 - 24abc
    Integer rhs9;  // r^3 + s^3 + t^3
    bool degenerate;  // r, s or t is zero
};

inline Integer eq8_expansion(const Integer& a, const Integer& b, const Integer& c) {
    return cube(a) + cube(b) + cube(c) - 18 * a * b * c + 3 * a * a * (b + c) + 3 * b * b * (c + a) +
           3 * c * c * (a + b);
}

inline App3Reduction app3_reduce(const Integer& a, const Integer& b, const Integer& c) {
    App3Reduction out{a + b - c, a - b + c, -a + b + c, cube(a + b + c) - 24 * a * b * c, 0, false};
    out.rhs9 = cube(out.r) + cube(out.s) + cube(out.t);
    out.degenerate = sgn(out.r) == 0 || sgn(out.s) == 0 || sgn(out.t) == 0;
    auto witness = [&] { return "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c); };
    const Integer expansion = eq8_expansion(a, b, c);
    ensure(expansion == out.lhs7, "CubeOfSumExpansion", witness);
    ensure(expansion == out.rhs9, "LinearFormCubeSum", witness);
    return out;
}

// --- identity fuzzing ------------------------------------------------------

/// A polynomial identity checked on a sampled triple of integers.
struct Identity {
    std::string id;
    std::function<bool(const Integer&, const Integer&, const Integer&)> holds;
};

struct IdentityReport {
    std::string id;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::optional<std::vector<Integer>> witness;  // first failing triple
};

inline const std::vector<Identity>& registered_identities() {
    static const std::vector<Identity> identities{
        {"cube_sum",
         [](const Integer& u, const Integer& v, const Integer&) {
             return cube(u + v) + cube(u - v) == 2 * cube(u) + 6 * u * v * v;
         }},
        {"fermat_reduction",
         [](const Integer& x0, const Integer& y0, const Integer&) {
             const Integer x = x0, y = is_odd(x0 + y0) ? Integer(y0 + 1) : y0;
             const Integer p = (x + y) / 2, q = (x - y) / 2;
             return cube(x) + cube(y) == 2 * p * (p * p + 3 * q * q);
         }},
        {"descent_alpha_beta",
         [](const Integer& r0, const Integer& s0, const Integer&) {
             const Integer r = 2 * r0 + 1, s = 2 * s0 + 1;
             const Integer alpha = (r - s) / 2, beta = (r + s) / 2;
             return cube(r) - cube(s) == 2 * alpha * (alpha * alpha + 3 * beta * beta);
         }},
        {"app2_linkage",
         [](const Integer& x, const Integer& y, const Integer& z) {
             const Integer p = y, q = y * y + 3 * x, r = 3 * (cube(y) + 6 * x * y + 2 * z);
             return 12 * cube(q) - 3 * pow(p, 6) - r * r == 36 * app2_residual(x, y, z);
         }},
        {"cube_of_sum_expansion",
         [](const Integer& a, const Integer& b, const Integer& c) {
             return cube(a + b + c) - 24 * a * b * c == eq8_expansion(a, b, c);
         }},
        {"linear_form_cube_sum",
         [](const Integer& a, const Integer& b, const Integer& c) {
             return cube(a + b - c) + cube(a - b + c) + cube(-a + b + c) == eq8_expansion(a, b, c);
         }},
    };
    return identities;
}

inline constexpr std::int64_t kFuzzMagnitude = 1'000'000;

/// Evaluates every identity on `count` seeded triples drawn uniformly from
/// [-10^6, 10^6]^3.
inline std::vector<IdentityReport> fuzz_identities(std::uint64_t count, std::uint64_t seed,
                                                   std::span<const Identity> identities = registered_identities()) {
    std::vector<IdentityReport> reports;
    for (const Identity& id : identities) reports.push_back({id.id, 0, 0, std::nullopt});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-kFuzzMagnitude, kFuzzMagnitude);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Integer a = dist(rng), b = dist(rng), c = dist(rng);
        for (std::size_t k = 0; k < identities.size(); ++k) {
            IdentityReport& rep = reports[k];
            ++rep.trials;
            if (!identities[k].holds(a, b, c)) {
                ++rep.failures;
                if (!rep.witness) rep.witness = std::vector<Integer>{a, b, c};
            }
        }
    }
    return reports;
}

// --- searches --------------------------------------------------------------

enum class AppTarget { Square, App2, App3 };

inline std::string_view app_target_name(AppTarget t) {
    switch (t) {
        case AppTarget::Square: return "square";
        case AppTarget::App2: return "app2";
        case AppTarget::App3: return "app3";
    }
    return "?";
}

/// square: |p|,|q| <= bound, p != 0, with 12q^3-3p^6 a square.
/// app2: nonzero x, y, z with 9x^3 = zy^3 + z^2 + 6xyz, tested through the
/// linkage 12q^3-3p^6 = r^2.
/// app3: nonzero a, b, c with (a+b+c)^3 = 24abc, tested as r^3+s^3+t^3 = 0.
inline SearchReport search_applications(AppTarget which, std::int64_t bound, unsigned jobs = 1) {
    SearchReport report;
    report.target = std::string(app_target_name(which));
    report.bound = bound;
    const auto nonzero = magnitude_order(bound);
    std::vector<Integer> big;
    for (std::int64_t v : nonzero) big.emplace_back(v);

    switch (which) {
        case AppTarget::Square: {
            report.constraints = {{"p_nonzero", true}};
            report.fields = {"p", "q", "r"};
            const auto qs = magnitude_order(bound, true);
            run_partitioned(report, nonzero, jobs, 2, [&](std::int64_t pv, SearchShard& shard) {
                const Integer p = pv;
                for (std::int64_t qv : qs) {
                    ++shard.tested;
                    if (auto r = square_discriminant(p, qv)) shard.hits.push_back({p, Integer(qv), *r});
                }
            });
            break;
        }
        case AppTarget::App2: {
            report.constraints = {{"nonzero", true}};
            report.fields = {"x", "y", "z"};
            run_partitioned(report, nonzero, jobs, 3, [&](std::int64_t xv, SearchShard& shard) {
                const Integer x = xv;
                for (const Integer& y : big) {
                    const Integer q = y * y + 3 * x;
                    const Integer lhs = 12 * cube(q) - 3 * pow(y, 6);
                    const Integer r_base = 3 * (cube(y) + 6 * x * y);
                    for (const Integer& z : big) {
                        ++shard.tested;
                        const Integer r = r_base + 6 * z;
                        if (lhs == r * r) shard.hits.push_back({x, y, z});
                    }
                }
            });
            break;
        }
        case AppTarget::App3: {
            report.constraints = {{"nonzero", true}};
            report.fields = {"a", "b", "c"};
            run_partitioned(report, nonzero, jobs, 3, [&](std::int64_t av, SearchShard& shard) {
                const Integer a = av;
                for (const Integer& b : big) {
                    for (const Integer& c : big) {
                        ++shard.tested;
                        if (cube(a + b - c) + cube(a - b + c) + cube(-a + b + c) == 0) shard.hits.push_back({a, b, c});
                    }
                }
            });
            break;
        }
    }
    return report;
}

}  // namespace eisen
