#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "dk/stdbasis.hpp"
#include "doctest.h"

using namespace dk;

namespace {

Poly random_poly(const RingPtr& R, std::mt19937& rng, int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-4, 4);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(R->nvars());
        for (int v = 0; v < R->nvars(); ++v) m.e[v] = expd(rng);
        ts.push_back({std::move(m), Rational(coefd(rng))});
    }
    return Poly::from_terms(R, std::move(ts));
}

}  // namespace

TEST_CASE("arithmetic examples") {
    auto R = Ring::make({"x", "y"});
    CHECK(Poly::parse(R, "x+y") + Poly::parse(R, "x-y") == Poly::parse(R, "2x"));
    CHECK((Poly::parse(R, "x+y") * Poly::zero(R)).is_zero());
    // hand expansion oracle: (x+y)(x-y) = x^2 - y^2
    CHECK(Poly::parse(R, "x+y") * Poly::parse(R, "x-y") == Poly::parse(R, "x^2-y^2"));
}

TEST_CASE("ring mismatch is an error") {
    auto R = Ring::make({"x", "y"});
    auto S = Ring::make({"x", "z"});
    CHECK_THROWS_AS(Poly::parse(R, "x") + Poly::parse(S, "x"), DkError);
}

TEST_CASE("leading term under the local ordering") {
    auto R = Ring::make({"x", "y"});
    // lower degree wins
    Poly f = Poly::parse(R, "x^2+y");
    CHECK(Poly::term(R, f.lt().m, f.lt().c) == Poly::parse(R, "y"));

    // weighted tie x1^2 vs x2^3 at degree 6: the reverse-lex tie-break picks
    // x1^2 (the later variable has the smaller exponent)
    auto W = Ring::make({"x1", "x2"}, {3, 2});
    Poly g = Poly::parse(W, "x1^2+x2^3");
    CHECK(Poly::term(W, g.lt().m, g.lt().c) == Poly::parse(W, "x1^2"));
    // ordering oracle: exactly one of the two comparisons holds
    Monomial a = Poly::parse(W, "x1^2").lt().m, b = Poly::parse(W, "x2^3").lt().m;
    CHECK(W->wdeg(a) == 6);
    CHECK(W->wdeg(b) == 6);
    CHECK(((W->cmp(a, b) > 0) ^ (W->cmp(b, a) > 0)));

    // a constant is the largest monomial
    Poly c = Poly::parse(R, "5");
    CHECK(c.lt().m.is_one());
    CHECK(c.lt().c == Rational(5));

    CHECK_THROWS_AS(Poly::zero(R).lt(), DkError);
}

TEST_CASE("weighted degree and homogeneity") {
    auto W = Ring::make({"x1", "x2"}, {3, 2});
    Poly f = Poly::parse(W, "x1^2+x2^3");
    long d;
    CHECK(f.homogeneous(&d));
    CHECK(d == 6);
    CHECK(f.order() == 6);

    auto R1 = Ring::make({"x"});
    Poly g = Poly::parse(R1, "x+x^2");
    CHECK(!g.homogeneous());
    CHECK(g.order() == 1);

    CHECK(Poly::zero(R1).order() == kDegInfinity);
}

TEST_CASE("ordering totality and 1 maximal") {
    auto R = Ring::make({"x", "y", "z"}, {2, 3, 1});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expd(0, 4);
    Monomial one(3);
    for (int i = 0; i < 300; ++i) {
        Monomial a(3), b(3);
        for (int v = 0; v < 3; ++v) a.e[v] = expd(rng), b.e[v] = expd(rng);
        int ab = R->cmp(a, b), ba = R->cmp(b, a);
        CHECK(ab == -ba);
        CHECK((a == b) == (ab == 0));
        if (!a.is_one()) CHECK(R->cmp(one, a) > 0);
    }
}

TEST_CASE("ring axioms on random inputs") {
    auto R = Ring::make({"x", "y", "z"});
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("serialize-parse-serialize is the identity") {
    auto R = Ring::make({"x", "y", "z"}, {1, 2, 1});
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(R, rng);
        std::string s1 = a.str();
        Poly back = Poly::parse(R, s1);
        CHECK(back == a);
        CHECK(back.str() == s1);
    }
}

TEST_CASE("parser accepts rational and compact notation") {
    auto R = Ring::make({"x", "y"});
    CHECK(Poly::parse(R, "1/2x") == Poly::parse(R, "x").scale(Rational(1, 2)));
    CHECK(Poly::parse(R, "2x3y") == Poly::parse(R, "2*x^3*y"));
    CHECK(Poly::parse(R, "x2") == Poly::parse(R, "x^2"));
    CHECK(Poly::parse(R, "(x+y)^2") == Poly::parse(R, "x^2+2xy+y^2"));
    CHECK_THROWS_AS(Poly::parse(R, "x+"), ParseError);
    CHECK_THROWS_AS(Poly::parse(R, "w"), ParseError);

    auto S = Ring::make({"x1", "x2"});
    CHECK(Poly::parse(S, "x1^2+x1x2") == Poly::parse(S, "x1*x1+x1*x2"));
}

TEST_CASE("substitution") {
    auto R = Ring::make({"x", "y", "t"});
    CHECK(subst(Poly::parse(R, "xy-t"), "t", Poly::zero(R)) == Poly::parse(R, "xy"));
    Poly f = Poly::parse(R, "x^2+t*x");
    CHECK(subst(f, "x", Poly::parse(R, "x")) == f);
    CHECK(subst(f, "t", Poly::parse(R, "y")) == Poly::parse(R, "x^2+xy"));
    CHECK_THROWS_AS(subst(f, "w", Poly::zero(R)), DkError);
}

TEST_CASE("derivative") {
    auto R = Ring::make({"x", "y"});
    CHECK(Poly::parse(R, "x^2+y^3").derivative(0) == Poly::parse(R, "2x"));
    CHECK(Poly::parse(R, "x^2+y^3").derivative(1) == Poly::parse(R, "3y^2"));
}

TEST_CASE("ring construction invariants") {
    CHECK_THROWS_AS(Ring::make({"x", "x"}), DkError);
    CHECK_THROWS_AS(Ring::make({""}), DkError);
    CHECK_THROWS_AS(Ring::make({"x"}, {0}), DkError);
    CHECK_THROWS_AS(Ring::make({"x"}, {-2}), DkError);
    CHECK_THROWS_AS(Ring::make({"x", "y"}, {1}), DkError);
}
