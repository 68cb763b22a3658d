#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "dk/tspaces.hpp"
#include "doctest.h"

using namespace dk;

namespace {

Ideal ratnorm_cone() {
    auto R = Ring::make({"x", "y", "z", "u", "v"});
    std::vector<std::vector<Poly>> M{{Poly::parse(R, "x"), Poly::parse(R, "y"),
                                      Poly::parse(R, "z"), Poly::parse(R, "u")},
                                     {Poly::parse(R, "y"), Poly::parse(R, "z"),
                                      Poly::parse(R, "u"), Poly::parse(R, "v")}};
    return minors(M, 2);
}

Ideal two_planes(bool extra_var) {
    std::vector<std::string> vars{"x", "y", "u", "v"};
    if (extra_var) vars.push_back("w");
    auto R = Ring::make(vars);
    Ideal A(R, {Poly::parse(R, "x"), Poly::parse(R, "y")});
    Ideal B(R, {Poly::parse(R, "u"), Poly::parse(R, "v")});
    return ideal_intersect(A, B);
}

Ideal icis_curve() {
    auto R = Ring::make({"x1", "x2", "x3"}, {3, 2, 3});
    return Ideal(R, {Poly::parse(R, "x1^2+x2^3"), Poly::parse(R, "x3^2+x2^3")});
}

long rank_of(std::vector<std::vector<Rational>> M) {
    long rank = 0;
    size_t cols = M.empty() ? 0 : M[0].size();
    size_t row = 0;
    for (size_t c = 0; c < cols && row < M.size(); ++c) {
        size_t piv = row;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[row]);
        for (size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][c] == 0) continue;
            Rational f = M[r][c] / M[row][c];
            for (size_t cc = 0; cc < cols; ++cc) M[r][cc] -= f * M[row][cc];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("t1 of the rational normal curve cone") {
    auto r = t1(ratnorm_cone());
    REQUIRE(r.tau);
    CHECK(*r.tau == 4);
    CHECK(r.basis.size() == 4);
    // graded with all weights -1: deformations of negative weight only
    REQUIRE(r.weights);
    CHECK(*r.weights == std::vector<long>{-1, -1, -1, -1});
}

TEST_CASE("rigidity of the two planes and the trivial extension") {
    auto r4 = t1(two_planes(false));
    CHECK(*r4.tau == 0);
    CHECK(is_rigid(two_planes(false)));

    auto r5 = t1(two_planes(true));
    CHECK(*r5.tau == 0);
    CHECK(is_rigid(two_planes(true)));
}

TEST_CASE("cusp is not rigid") {
    auto R = Ring::make({"x", "y"});
    CHECK(!is_rigid(Ideal(R, {Poly::parse(R, "x^2+y^3")})));
}

TEST_CASE("ICIS Tjurina module: tau = 9, same cokernel as the paper's basis") {
    Ideal I = icis_curve();
    auto r = t1(I);
    REQUIRE(r.tau);
    CHECK(*r.tau == 9);
    CHECK(r.ci_route);
    CHECK(r.basis.size() == 9);

    // the paper's nine C-basis vectors span the same quotient: their
    // coordinate matrix w.r.t. our staircase basis is invertible
    const RingPtr& R = I.ring;
    auto v = [&](const char* a, const char* b) {
        return PolyVec({Poly::parse(R, a), Poly::parse(R, b)});
    };
    std::vector<PolyVec> paper{v("1", "0"),     v("0", "1"),    v("x2", "0"),
                               v("x3", "0"),    v("x2x3", "0"), v("x2^2", "0"),
                               v("0", "x1"),    v("0", "x2"),   v("0", "x1x2")};
    std::vector<std::vector<Rational>> coords;
    for (const auto& p : paper) coords.push_back(r.pres_std->coordinates(p));
    CHECK(rank_of(coords) == 9);
}

TEST_CASE("the two T1 presentations agree on the ICIS fixture") {
    Ideal I = icis_curve();
    auto direct = t1(I);
    auto general = t1_normal_module(I);
    REQUIRE(general.tau);
    CHECK(*general.tau == *direct.tau);
}

TEST_CASE("t1_hypersurface") {
    auto R = Ring::make({"x", "y"});
    auto cusp = t1_hypersurface(Poly::parse(R, "x^2+y^3"));
    CHECK(*cusp.tau == 2);
    REQUIRE(cusp.basis.size() == 2);
    CHECK(cusp.basis[0][0] == Poly::parse(R, "1"));
    CHECK(cusp.basis[1][0] == Poly::parse(R, "y"));

    auto smooth = t1_hypersurface(Poly::parse(R, "x"));
    CHECK(*smooth.tau == 0);

    auto swapped = t1_hypersurface(Poly::parse(R, "x^3-y^2"));
    CHECK(*swapped.tau == 2);

    CHECK_THROWS_AS(t1_hypersurface(Poly::parse(R, "1+x")), DkError);
}

TEST_CASE("t1 agrees with t1_hypersurface on random principal ideals") {
    auto R = Ring::make({"x", "y"});
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coefd(-3, 3);
    int tested = 0;
    for (int it = 0; it < 60 && tested < 10; ++it) {
        // random curve germ x^a + y^b + mixed terms
        std::vector<Term> ts;
        std::uniform_int_distribution<int> ad(2, 4);
        int a = ad(rng), b = ad(rng);
        Monomial mx(2), my(2);
        mx.e[0] = a;
        my.e[1] = b;
        ts.push_back({mx, Rational(1)});
        ts.push_back({my, Rational(1)});
        Monomial mm(2);
        mm.e[0] = 1 + (rng() % 3);
        mm.e[1] = 1 + (rng() % 3);
        ts.push_back({mm, Rational(coefd(rng))});
        Poly f = Poly::from_terms(R, std::move(ts));
        auto hyper = t1_hypersurface(f);
        if (!hyper.tau || *hyper.tau > 50) continue;
        auto gen = t1(Ideal(R, {f}));
        REQUIRE(gen.tau);
        CHECK(*gen.tau == *hyper.tau);
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("t2 of the rational normal curve cone") {
    auto r = t2(ratnorm_cone());
    REQUIRE(r.dim);
    CHECK(*r.dim == 3);
}

TEST_CASE("t2 vanishes for complete intersections") {
    CHECK(*t2(icis_curve()).dim == 0);

    auto R = Ring::make({"x", "y"});
    CHECK(*t2(Ideal(R, {Poly::parse(R, "xy")})).dim == 0);

    // random complete intersections
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coefd(1, 3);
    auto R3 = Ring::make({"x", "y", "z"});
    for (int it = 0; it < 5; ++it) {
        Ideal I(R3, {Poly::parse(R3, "x^2") + Poly::parse(R3, "y^3").scale(coefd(rng)),
                     Poly::parse(R3, "z^2") + Poly::parse(R3, "xy").scale(coefd(rng))});
        if (!ci_unfolding_is_deformation(I)) continue;
        CHECK(*t2(I).dim == 0);
    }
}

TEST_CASE("t1_grading") {
    auto R = Ring::make({"x", "y"}, {3, 2});
    Ideal cusp(R, {Poly::parse(R, "x^2+y^3")});
    auto nu = t1_grading(cusp);
    CHECK(nu == std::vector<long>{-6, -4});  // all negative

    auto rn = t1_grading(ratnorm_cone());
    CHECK(rn == std::vector<long>{-1, -1, -1, -1});

    auto R1 = Ring::make({"x"});
    CHECK(t1_grading(Ideal(R1, {Poly::parse(R1, "x")})).empty());

    // non-homogeneous input is rejected
    auto R2 = Ring::make({"x", "y"});
    CHECK_THROWS_AS(t1_grading(Ideal(R2, {Poly::parse(R2, "x^2+y^3")})), DkError);
}

TEST_CASE("grading sanity: basis vectors are homogeneous with matching shift") {
    Ideal I = ratnorm_cone();
    auto r = t1(I);
    REQUIRE(r.weights);
    std::vector<long> minus_d;
    for (const auto& g : I.gens) {
        long d;
        REQUIRE(g.homogeneous(&d));
        minus_d.push_back(-d);
    }
    for (size_t j = 0; j < r.basis.size(); ++j) {
        long deg;
        CHECK(r.basis[j].homogeneous(minus_d, &deg));
        CHECK(deg == (*r.weights)[j]);
    }
}

TEST_CASE("errors on the unit ideal") {
    auto R = Ring::make({"x"});
    Ideal unit(R, {Poly::parse(R, "1+x")});
    CHECK_THROWS_AS(t1(unit), DkError);
    CHECK_THROWS_AS(t2(unit), DkError);
}

TEST_CASE("non-isolated input reports infinite tau") {
    // xy in three variables: the singular locus is a line
    auto R = Ring::make({"x", "y", "z"});
    auto r = t1(Ideal(R, {Poly::parse(R, "xy")}));
    CHECK(!r.tau);
}
