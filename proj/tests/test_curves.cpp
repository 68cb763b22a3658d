#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "dk/curves.hpp"
#include "dk/icis.hpp"
#include "dk/tspaces.hpp"
#include "doctest.h"

using namespace dk;

namespace {

// gap-count oracle by direct enumeration
std::vector<long> gaps_oracle(const std::vector<long>& gens, long bound) {
    std::vector<char> reach(bound + 1, 0);
    reach[0] = 1;
    for (long v = 1; v <= bound; ++v)
        for (long g : gens)
            if (v >= g && reach[v - g]) reach[v] = 1;
    std::vector<long> gaps;
    for (long v = 1; v <= bound; ++v)
        if (!reach[v]) gaps.push_back(v);
    return gaps;
}

CurveParam curve(std::vector<std::vector<const char*>> branches, int trunc = 0) {
    auto Rs = Ring::make({"s"});
    CurveParam C;
    C.truncation = trunc;
    for (auto& b : branches) {
        BranchParam bp;
        for (const char* c : b) bp.coords.push_back(Poly::parse(Rs, c));
        C.branches.push_back(std::move(bp));
    }
    return C;
}

}  // namespace

TEST_CASE("semigroup fixtures") {
    auto S = NumericalSemigroup::from_generators({2, 3});
    CHECK(S.gaps == std::vector<long>{1});
    CHECK(S.conductor == 2);
    CHECK(S.type() == 1);
    auto inv = semigroup_invariants(S);
    CHECK(inv.delta == 1);
    CHECK(inv.c == 2);
    CHECK(*inv.t == 1);
    CHECK(inv.mu == 2);
    CHECK(*inv.e_exact == 2);
    CHECK(*inv.gorenstein);

    auto S2 = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK(S2.pseudo_frobenius == std::vector<long>{1, 2});  // enumeration oracle
    auto inv2 = semigroup_invariants(S2);
    CHECK(inv2.delta == 2);
    CHECK(inv2.c == 3);
    CHECK(*inv2.t == 2);
    CHECK(inv2.mu == 4);
    CHECK(*inv2.e_exact == 5);
    CHECK(!*inv2.gorenstein);

    auto S1 = NumericalSemigroup::from_generators({1});
    auto inv1 = semigroup_invariants(S1);
    CHECK(inv1.smooth);
    CHECK(inv1.delta == 0);
    CHECK(inv1.c == 0);

    CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), DkError);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({0}), DkError);
}

TEST_CASE("semigroup identities for small generator sets") {
    // c <= 2*delta with equality iff symmetric (t = 1), generators <= 30
    std::mt19937 rng(3);
    int symmetric_seen = 0, tested = 0;
    for (int it = 0; it < 200 && tested < 60; ++it) {
        std::vector<long> gens;
        int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(2 + static_cast<long>(rng() % 29));
        long g = 0;
        for (long x : gens) g = std::gcd(g, x);
        if (g != 1) continue;
        ++tested;
        auto S = NumericalSemigroup::from_generators(gens);
        CHECK(S.conductor <= 2 * S.delta());
        CHECK((S.conductor == 2 * S.delta()) == S.symmetric());
        // cross-check gaps against the enumeration oracle
        CHECK(S.gaps == gaps_oracle(S.gens, std::max(S.conductor, 1l)));
        if (S.symmetric()) ++symmetric_seen;
        // quasihomogeneous Gorenstein: e = mu (Thm on Gorenstein curves)
        auto inv = semigroup_invariants(S);
        if (!inv.smooth && *inv.gorenstein) CHECK(*inv.e_exact == inv.mu);
    }
    CHECK(tested >= 50);
    CHECK(symmetric_seen > 0);
}

TEST_CASE("delta from parametrization") {
    auto cusp = delta_from_param(curve({{"s^2", "s^3"}}));
    CHECK(cusp.delta == 1);
    CHECK(cusp.c == 2);
    CHECK(cusp.m == 2);
    CHECK(cusp.r == 1);

    auto node = delta_from_param(curve({{"s", "0"}, {"0", "s"}}));
    CHECK(node.delta == 1);
    CHECK(node.c == 2);
    CHECK(node.m == 2);
    CHECK(node.r == 2);

    auto smooth = delta_from_param(curve({{"s", "0"}}));
    CHECK(smooth.delta == 0);
    CHECK(smooth.c == 0);
    CHECK(smooth.m == 1);
    CHECK(smooth.smooth);

    // the semigroup route agrees on monomial curves: <3,4,5>
    auto mono = delta_from_param(curve({{"s^3", "s^4", "s^5"}}));
    auto semi = semigroup_invariants(NumericalSemigroup::from_generators({3, 4, 5}));
    CHECK(mono.delta == semi.delta);
    CHECK(mono.c == semi.c);
    CHECK(mono.m == semi.m);
    CHECK(mono.mu == semi.mu);

    CHECK_THROWS_AS(delta_from_param(curve({{"s", "0"}, {"s", "0"}})), DkError);
    CHECK_THROWS_AS(delta_from_param(curve({{"0", "0"}})), DkError);
}

TEST_CASE("mu = 2 delta - r + 1 against the plane-curve Jacobian route") {
    // pairs (parametrization, plane equation)
    struct Fixture {
        std::vector<std::vector<const char*>> branches;
        const char* equation;
    };
    std::vector<Fixture> fixtures{
        {{{"s^2", "s^3"}}, "y^2-x^3"},
        {{{"s", "0"}, {"0", "s"}}, "xy"},
        {{{"s^2", "s^5"}}, "y^2-x^5"},
        {{{"s^2", "s^7"}}, "y^2-x^7"},
        {{{"s^3", "s^4"}}, "y^3-x^4"},
        {{{"s^3", "s^5"}}, "y^3-x^5"},
        {{{"s^3", "s^7"}}, "y^3-x^7"},
        {{{"s^4", "s^5"}}, "y^4-x^5"},
        {{{"s", "0"}, {"0", "s"}, {"s", "s"}}, "xy*(x-y)"},
        {{{"s", "s^2"}, {"s", "-s^2"}}, "y^2-x^4"},  // tacnode
        {{{"s^2", "s^3"}, {"s", "0"}}, "(y^2-x^3)*y"},
    };
    auto R = Ring::make({"x", "y"});
    for (auto& fx : fixtures) {
        auto inv = delta_from_param(curve({fx.branches}));
        long mu_alg = milnor_hypersurface(Poly::parse(R, fx.equation));
        CHECK(inv.mu == mu_alg);
        CHECK(inv.mu == 2 * inv.delta - inv.r + 1);
    }
}

TEST_CASE("smooth iff mu = 0") {
    CHECK(mu_curve(curve({{"s", "s^2"}})) == 0);
    CHECK(mu_curve(curve({{"s^2", "s^3"}})) == 2);
    CHECK(mu_curve(curve({{"s", "0"}, {"0", "s"}})) == 1);
}

TEST_CASE("deligne bounds") {
    // <2,3>: interval collapses at e = 2
    auto b23 = deligne_bounds(semigroup_invariants(NumericalSemigroup::from_generators({2, 3})));
    CHECK(b23.lo == 2);
    CHECK(b23.hi == 2);
    CHECK(*b23.e == 2);

    // <3,4,5>: [5,5]
    auto b345 =
        deligne_bounds(semigroup_invariants(NumericalSemigroup::from_generators({3, 4, 5})));
    CHECK(b345.lo == 5);
    CHECK(b345.hi == 5);
    CHECK(*b345.e == 5);

    // node from the parametrization route: t unknown, interval [1,1]
    auto node = delta_from_param(curve({{"s", "0"}, {"0", "s"}}));
    auto bn = deligne_bounds(node);
    CHECK(bn.lo == 1);
    CHECK(bn.hi == 1);
    CHECK(*bn.e == 1);

    // interval always contains the quasihomogeneous e on random semigroups
    std::mt19937 rng(9);
    for (int it = 0; it < 40; ++it) {
        std::vector<long> gens{2 + static_cast<long>(rng() % 20),
                               2 + static_cast<long>(rng() % 20),
                               2 + static_cast<long>(rng() % 20)};
        long g = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
        if (g != 1) continue;
        auto inv = semigroup_invariants(NumericalSemigroup::from_generators(gens));
        if (inv.smooth) continue;
        auto b = deligne_bounds(inv);
        CHECK(b.lo <= *inv.e_exact);
        CHECK(*inv.e_exact <= b.hi);
    }
}

TEST_CASE("obstructedness hint") {
    // cusp: tau = 2 = mu + t - 1
    auto inv = semigroup_invariants(NumericalSemigroup::from_generators({2, 3}));
    CHECK(obstructedness_hint(inv, 2) == Obstructedness::Unobstructed);
    CHECK(obstructedness_hint(inv, 3) == Obstructedness::Obstructed);

    // <3,4,5> as the monomial curve in C^3, tau computed by t1 through the
    // 2-minors of [[x,y,z],[y,z,x^2]]
    auto R = Ring::make({"x", "y", "z"}, {3, 4, 5});
    std::vector<std::vector<Poly>> M{
        {Poly::parse(R, "x"), Poly::parse(R, "y"), Poly::parse(R, "z")},
        {Poly::parse(R, "y"), Poly::parse(R, "z"), Poly::parse(R, "x^2")}};
    Ideal I = minors(M, 2);
    auto r = t1(I);
    REQUIRE(r.tau);
    auto inv345 = semigroup_invariants(NumericalSemigroup::from_generators({3, 4, 5}));
    // mu + t - 1 = 5; the pinned tau from the pipeline run
    CHECK(*r.tau == 5);
    CHECK(obstructedness_hint(inv345, *r.tau) == Obstructedness::Unobstructed);

    CurveInvariants smooth;
    smooth.smooth = true;
    CHECK(obstructedness_hint(smooth, 0) == Obstructedness::Unobstructed);
}

TEST_CASE("lines smoothability") {
    CHECK(lines_smoothability(6, 15) == Smoothability::NotSmoothableClause1);
    CHECK(lines_not_smoothable(lines_smoothability(10, 419)));
    CHECK(lines_smoothability(4, 100) == Smoothability::Unknown);
    CHECK(lines_smoothability(5, 50) == Smoothability::Unknown);
    CHECK(lines_smoothability(3, 1000) == Smoothability::Smoothable);
    CHECK(lines_smoothability(2, 77) == Smoothability::Smoothable);
    // n, n+1, n+2 lines always smoothable
    for (long n = 4; n <= 12; ++n) {
        CHECK(lines_smoothability(n, n) == Smoothability::Smoothable);
        CHECK(lines_smoothability(n, n + 1) == Smoothability::Smoothable);
        CHECK(lines_smoothability(n, n + 2) == Smoothability::Smoothable);
    }
    CHECK_THROWS_AS(lines_smoothability(1, 5), DkError);
}

TEST_CASE("lines table reproduces the published intervals") {
    std::vector<std::pair<long, std::pair<long, long>>> published{
        {6, {15, 21}}, {7, {13, 30}}, {8, {13, 72}}, {9, {13, 193}}, {10, {14, 419}}};
    for (auto& [n, iv] : published) {
        auto row = lines_table_row(n);
        REQUIRE(row.intervals.size() == 1);
        CHECK(row.intervals[0] == iv);
    }
    // nothing for n = 4, 5
    CHECK(lines_table_row(4).intervals.empty());
    CHECK(lines_table_row(5).intervals.empty());
}
