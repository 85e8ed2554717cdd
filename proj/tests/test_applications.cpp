#include "eisen/applications.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace eisen;
using oracle::Poly;

namespace {

template <class Fn>
ErrorCode error_of(Fn&& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no DomainError";
    return ErrorCode::ParseError;
}

std::vector<oracle::Triple> triples(const SearchReport& r) {
    std::vector<oracle::Triple> out;
    for (const auto& h : r.hits) out.push_back({h[0].get_si(), h[1].get_si(), h[2].get_si()});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

// The derived constants are confirmed symbolically before any numeric
// check relies on them.
TEST(SymbolicExpansion, App2LinkageConstantIs36) {
    const Poly x = Poly::var(0, 3), y = Poly::var(1, 3), z = Poly::var(2, 3);
    const Poly p = y, q = y * y + 3 * x, r = 3 * (y.pow(3) + 6 * x * y + 2 * z);
    const Poly residual = 9 * x.pow(3) - z * y.pow(3) - z * z - 6 * x * y * z;
    EXPECT_EQ(12 * q.pow(3) - 3 * p.pow(6) - r * r, 36 * residual);
    EXPECT_FALSE(12 * q.pow(3) - 3 * p.pow(6) - r * r == 35 * residual);
}

TEST(SymbolicExpansion, App1CollapseTo216) {
    // With r^2 replaced by 12q^3 - 3p^6: 2u^3 + 6u r^2 at u = 3p^3 is 216 p^3 q^3.
    const Poly p = Poly::var(0, 2), q = Poly::var(1, 2);
    const Poly u = 3 * p.pow(3), r2 = 12 * q.pow(3) - 3 * p.pow(6);
    EXPECT_EQ(2 * u.pow(3) + 6 * u * r2, 216 * p.pow(3) * q.pow(3));
    EXPECT_EQ((6 * p * q).pow(3), 216 * p.pow(3) * q.pow(3));
}

TEST(SymbolicExpansion, CubeSumAndLinearForms) {
    const Poly u = Poly::var(0, 3), v = Poly::var(1, 3);
    EXPECT_EQ((u + v).pow(3) + (u - v).pow(3), 2 * u.pow(3) + 6 * u * v * v);

    const Poly a = Poly::var(0, 3), b = Poly::var(1, 3), c = Poly::var(2, 3);
    const Poly expansion = a.pow(3) + b.pow(3) + c.pow(3) - 18 * a * b * c + 3 * a * a * (b + c) +
                           3 * b * b * (c + a) + 3 * c * c * (a + b);
    EXPECT_EQ((a + b + c).pow(3) - 24 * a * b * c, expansion);
    EXPECT_EQ((a + b - c).pow(3) + (a - b + c).pow(3) + (-1 * a + b + c).pow(3), expansion);
}

TEST(SquareDiscriminant, Examples) {
    EXPECT_EQ(square_discriminant(1, 1), Integer(3));
    EXPECT_EQ(square_discriminant(2, 4), Integer(24));
    EXPECT_EQ(square_discriminant(1, 2), std::nullopt);
    EXPECT_EQ(square_discriminant(-3, 9), Integer(81));
    EXPECT_EQ(error_of([] { square_discriminant(0, 5); }), ErrorCode::PreconditionError);
}

TEST(App1, PreconditionsAndDegeneracy) {
    EXPECT_EQ(error_of([] { app1_construct(1, 1, 3); }), ErrorCode::DegenerateError);
    EXPECT_EQ(error_of([] { app1_construct(2, 4, -24); }), ErrorCode::DegenerateError);
    EXPECT_EQ(error_of([] { app1_construct(1, 2, 9); }), ErrorCode::PreconditionError);
    EXPECT_EQ(error_of([] { app1_construct(0, 2, 0); }), ErrorCode::PreconditionError);
    EXPECT_EQ(error_of([] { app1_construct(1, 0, 0); }), ErrorCode::PreconditionError);
}

TEST(App1, CubeSumIdentityAtSmallValues) {
    EXPECT_EQ(cube(Integer(3)) + cube(Integer(1)), 2 * 8 + 6 * 2);
}

TEST(App2, Examples) {
    App2Reduction r = app2_reduce(1, 1, 1);
    EXPECT_EQ(r.p, 1);
    EXPECT_EQ(r.q, 4);
    EXPECT_EQ(r.r, 27);
    EXPECT_EQ(r.residual, 1);
    EXPECT_EQ(12 * cube(r.q) - 3 * pow(r.p, 6) - r.r * r.r, 36);

    r = app2_reduce(2, 1, 3);
    EXPECT_EQ(r.q, 7);
    EXPECT_EQ(r.r, 57);
    EXPECT_EQ(r.residual, 24);
    EXPECT_EQ(12 * cube(r.q) - 3 * pow(r.p, 6) - r.r * r.r, 864);

    r = app2_reduce(0, 1, 5);
    EXPECT_FALSE(r.hypothesis_met);
    EXPECT_EQ(r.residual, -5 - 25);
}

TEST(App3, Examples) {
    App3Reduction r = app3_reduce(1, 1, 1);
    EXPECT_EQ(r.r, 1);
    EXPECT_EQ(r.s, 1);
    EXPECT_EQ(r.t, 1);
    EXPECT_EQ(r.lhs7, 3);
    EXPECT_EQ(r.rhs9, 3);
    EXPECT_FALSE(r.degenerate);

    r = app3_reduce(2, 1, 1);
    EXPECT_EQ(r.r, 2);
    EXPECT_EQ(r.s, 2);
    EXPECT_EQ(r.t, 0);
    EXPECT_EQ(r.lhs7, 16);
    EXPECT_TRUE(r.degenerate);

    r = app3_reduce(1, 2, 3);
    EXPECT_EQ(r.r, 0);
    EXPECT_EQ(r.s, 2);
    EXPECT_EQ(r.t, 4);
    EXPECT_EQ(r.lhs7, 72);
    EXPECT_TRUE(r.degenerate);
}

TEST(App3, DegenerateFormIsPositiveDefinite) {
    // r = 0 would force a^2 + b^2 - ab = 0; that form is ((2a-b)^2 + 3b^2)/4.
    for (long a = -200; a <= 200; ++a)
        for (long b = -200; b <= 200; ++b) {
            if (!a || !b) continue;
            ASSERT_GT(a * a + b * b - a * b, 0);
            ASSERT_EQ(4 * (a * a + b * b - a * b), (2 * a - b) * (2 * a - b) + 3 * b * b);
        }
}

TEST(Fuzz, AllIdentitiesHold) {
    const auto reports = fuzz_identities(1000, 42);
    ASSERT_EQ(reports.size(), 6u);
    for (const auto& r : reports) {
        EXPECT_EQ(r.trials, 1000u) << r.id;
        EXPECT_EQ(r.failures, 0u) << r.id;
        EXPECT_FALSE(r.witness);
    }
    for (const auto& r : fuzz_identities(1, 0)) {
        EXPECT_EQ(r.trials, 1u);
        EXPECT_EQ(r.failures, 0u);
    }
}

TEST(Fuzz, Deterministic) {
    std::vector<Identity> probe{{"record", [](const Integer& a, const Integer&, const Integer&) { return a < 0; }}};
    const auto x = fuzz_identities(500, 9, probe), y = fuzz_identities(500, 9, probe);
    EXPECT_EQ(x[0].failures, y[0].failures);
    EXPECT_EQ(x[0].witness, y[0].witness);
}

TEST(Fuzz, InjectedBugIsCaught) {
    std::vector<Identity> broken{
        {"app2_linkage_35", [](const Integer& x, const Integer& y, const Integer& z) {
             const Integer p = y, q = y * y + 3 * x, r = 3 * (cube(y) + 6 * x * y + 2 * z);
             return 12 * cube(q) - 3 * pow(p, 6) - r * r == 35 * app2_residual(x, y, z);
         }}};
    const auto reports = fuzz_identities(100, 3, broken);
    EXPECT_GT(reports[0].failures, 0u);
    ASSERT_TRUE(reports[0].witness);
    EXPECT_EQ(reports[0].witness->size(), 3u);
}

TEST(SearchApplications, Examples) {
    const SearchReport sq = search_applications(AppTarget::Square, 20);
    std::vector<oracle::Triple> want;
    for (long p = -4; p <= 4; ++p)
        if (p) want.push_back({p, p * p, 3 * std::labs(p * p * p)});
    std::sort(want.begin(), want.end());
    EXPECT_EQ(triples(sq), want);
    EXPECT_TRUE(search_applications(AppTarget::App2, 30).hits.empty());
    EXPECT_TRUE(search_applications(AppTarget::App3, 30).hits.empty());
}

TEST(SearchApplications, MatchNaiveOraclesAt30) {
    EXPECT_EQ(triples(search_applications(AppTarget::Square, 30)), oracle::naive_square(30));
    EXPECT_EQ(triples(search_applications(AppTarget::App2, 30)), oracle::naive_app2(30));
    EXPECT_EQ(triples(search_applications(AppTarget::App3, 30)), oracle::naive_app3(30));
}

TEST(SearchApplications, JobsInvariant) {
    for (AppTarget t : {AppTarget::Square, AppTarget::App2, AppTarget::App3}) {
        const SearchReport a = search_applications(t, 15, 1), b = search_applications(t, 15, 5);
        EXPECT_EQ(a.hits, b.hits);
        EXPECT_EQ(a.candidates_tested, b.candidates_tested);
    }
}
