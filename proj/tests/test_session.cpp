#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "dk/session.hpp"
#include "doctest.h"

using namespace dk;

TEST_CASE("the transliterated flatness session") {
    const char* text = R"(
// the paper's first session
ring R = 0, (x,y,z,t), ds;
ideal f = xy, xz, yz;
ideal F = xy-t, xz, yz;
ideal G = xy-tx, xz, yz;
flat f F;
flat f G;
)";
    Session s = parse_session(text);
    CHECK(s.ideals.count("f") == 1);
    CHECK(s.ideals.count("F") == 1);
    CHECK(s.commands.size() == 2);

    auto res = run_session(s, {});
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("NotFlat") != std::string::npos);
    CHECK(res.text.find("witness") != std::string::npos);
    CHECK(res.text.find("Flat\n") != std::string::npos);
}

TEST_CASE("the rational normal cone session") {
    const char* text = R"(
ring R = 0, (x,y,z,u,v), ds;
matrix M[2][4] = x,y,z,u, y,z,u,v;
ideal I = minor(M, 2);
t1 I;
t2 I;
)";
    auto res = run_session(parse_session(text), {});
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("tau = 4") != std::string::npos);
    CHECK(res.text.find("dimT2 = 3") != std::string::npos);
}

TEST_CASE("intersect and inline ideal constructors") {
    const char* text = R"(
ring R = 0, (x,y,u,v), ds;
ideal I = intersect(ideal(x,y), ideal(u,v));
t1 I;
rigid I;
)";
    auto res = run_session(parse_session(text), {});
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("tau = 0") != std::string::npos);
    CHECK(res.text.find("rigid = yes") != std::string::npos);
}

TEST_CASE("rational coefficients parse") {
    const char* text = R"(
ring R = 0, (x,y), ds;
ideal I = x^2 + 1/2y;
vdim I;
)";
    auto res = run_session(parse_session(text), {});
    CHECK(res.exit_code == 0);
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_session("ideal I = x;"), ParseError);   // no ring
    CHECK_THROWS_AS(parse_session(""), ParseError);               // empty file
    CHECK_THROWS_AS(parse_session("ring R = 0, (xялmm"), ParseError);
    CHECK_THROWS_AS(parse_session("ring R = 0, (x), ds; ideal I = w;"), ParseError);
    CHECK_THROWS_AS(
        parse_session("ring R = 0, (x), ds; ideal I = x; ideal I = x;"),  // duplicate
        ParseError);
    // lines-only sessions need no ring
    CHECK_NOTHROW(parse_session("lines 6 15;"));
}

TEST_CASE("exit codes") {
    // a computation error: t1 of the unit ideal
    const char* text = R"(
ring R = 0, (x), ds;
ideal I = 1+x;
t1 I;
)";
    auto res = run_session(parse_session(text), {});
    CHECK(res.exit_code == 1);
    CHECK(res.text.find("error") != std::string::npos);
}

TEST_CASE("json mirror") {
    RunOptions opt;
    opt.json = true;
    auto res = run_session(parse_session("ring R = 0, (x,y), ds;"
                                         "ideal I = x^2+y^3; tjurina I;"),
                           opt);
    CHECK(res.exit_code == 0);
    CHECK(res.json.find("\"tau\"") != std::string::npos);
    CHECK(res.json.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("curve and semigroup commands") {
    const char* text = R"(
ring R = 0, (x,y), ds;
curve C = (s^2, s^3) | (s, 0);
curve C;
semigroup 3, 4, 5;
lines 6 15;
lines-table 6..7;
)";
    auto res = run_session(parse_session(text), {});
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("delta = 2") != std::string::npos);  // cusp + line
    CHECK(res.text.find("e = 5") != std::string::npos);
    CHECK(res.text.find("NotSmoothable (clause 1)") != std::string::npos);
    CHECK(res.text.find("[13,30]") != std::string::npos);
}

TEST_CASE("printing is canonical: parse, print, parse is stable") {
    auto R = Ring::make({"x", "y", "z"});
    Ideal I(R, {Poly::parse(R, "yz+x^3"), Poly::parse(R, "x^2-z^2"), Poly::parse(R, "y")});
    std::string once = print_ideal(I);
    std::vector<Poly> back;
    size_t pos = 0;
    std::string tmp = once;
    for (std::string piece; (pos = tmp.find(", ")) != std::string::npos;) {
        back.push_back(Poly::parse(R, tmp.substr(0, pos)));
        tmp = tmp.substr(pos + 2);
    }
    back.push_back(Poly::parse(R, tmp));
    CHECK(print_ideal(Ideal(R, back)) == once);
}

TEST_CASE("versal session output") {
    RunOptions opt;
    opt.versal_order = 3;
    auto res = run_session(parse_session("ring R = 0, (x,y), ws(3,2);"
                                         "ideal I = x^2+y^3; versal I;"),
                           opt);
    CHECK(res.exit_code == 0);
    CHECK(res.text.find("Js: 0") != std::string::npos);
    CHECK(res.text.find("base variables: A B") != std::string::npos);
}
