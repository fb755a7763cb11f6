#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "curveforge/parse.hpp"

using namespace curveforge;

namespace {

TriPoly<Rat> curve(const std::string& s) { return parse_poly<3>({s}, kProjectiveNames); }

}  // namespace

TEST_CASE("parse the quartic with a singular point at infinity") {
    auto F = curve("Y^2*Z^2 - X^4 - Z^4");
    TriPoly<Rat> X = TriPoly<Rat>::variable(0), Y = TriPoly<Rat>::variable(1), Z = TriPoly<Rat>::variable(2);
    CHECK(F == Y.pow(2) * Z.pow(2) - X.pow(4) - Z.pow(4));
    CHECK(curve("Y^2*Z^2 = X^4 + Z^4") == F);
}

TEST_CASE("parse an affine equation") {
    auto f = parse_poly<2>({"y^2 = x^3 + x^2"}, kAffineNames);
    BinaryForm<Rat> x = BinaryForm<Rat>::variable(0), y = BinaryForm<Rat>::variable(1);
    CHECK(f == y.pow(2) - x.pow(3) - x.pow(2));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_poly<2>({"x y"}, kAffineNames);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("implicit multiplication") != std::string::npos);
    }
    try {
        parse_poly<3>({"X^2 +\n  Y^-1"}, kProjectiveNames);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_poly<3>({"X^Y"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"X^(1/2)"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"X = Y = Z"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"(X = Y)"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"W + X"}, kProjectiveNames), UnknownVariable);
    CHECK_THROWS_AS(parse_poly<3>({"X / Y"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"X / 0"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"nonsense((("}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({""}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({"X^300"}, kProjectiveNames), ParseError);
    CHECK_THROWS_AS(parse_poly<3>({std::string(1000, '(') + "X" + std::string(1000, ')')}, kProjectiveNames),
                    ParseError);
}

TEST_CASE("rationals, unary signs and division by constants") {
    auto p = parse_poly<1>({"3/4*t - -t/2 + (1/3)^2"}, {"t"});
    UniPoly<Rat> t = UniPoly<Rat>::variable(0);
    CHECK(p == t * Rat(BigInt(5), BigInt(4)) + UniPoly<Rat>(Rat(BigInt(1), BigInt(9))));
    CHECK(parse_poly<1>({"-t^2"}, {"t"}) == -(t * t));
}

TEST_CASE("render examples") {
    auto lem = curve("X^4 + 2*X^2*Y^2 + Y^4 - X^2 + Y^2");
    CHECK(render_poly(lem, kProjectiveNames) == "X^4 + 2*X^2*Y^2 + Y^4 - X^2 + Y^2");
    CHECK(render_poly(TriPoly<Rat>(), kProjectiveNames) == "0");
    CHECK(render_poly(-TriPoly<Rat>::variable(0), kProjectiveNames) == "-X");
    CHECK(render_poly(parse_poly<1>({"2*t^5/5 - 2/3*t^3 - 7"}, {"t"}), VarNames<1>{"t"}) == "2/5*t^5 - 2/3*t^3 - 7");
    auto i = QuadExt::make(0, 1, -1);
    TriPoly<QuadExt> q = TriPoly<QuadExt>::variable(0) * i + TriPoly<QuadExt>(QuadExt::make(1, -2, 3));
    CHECK(render_poly(q, kProjectiveNames) == "sqrt(-1)*X + (1 - 2*sqrt(3))");
    CHECK(render_poly(-q, kProjectiveNames) == "-sqrt(-1)*X + (-1 + 2*sqrt(3))");
}

TEST_CASE("fractions") {
    auto [n, d] = parse_fraction({"t*(t^2+1)/(t^4+1)"}, "t");
    CHECK(render_fraction(n, d, "t") == "(t^3 + t)/(t^4 + 1)");
    auto [n2, d2] = parse_fraction({"(t^2 - 1)/(t - 1)"}, "t");
    CHECK(render_fraction(n2, d2, "t") == "t + 1");
    auto [n3, d3] = parse_fraction({"1/(2*t)"}, "t");
    CHECK(render_fraction(n3, d3, "t") == "1/2/t");
    auto [n4, d4] = parse_fraction({"-t^3/(1 - t^2)"}, "t");
    CHECK(render_fraction(n4, d4, "t") == "t^3/(t^2 - 1)");
    CHECK_THROWS_AS(parse_fraction({"1/(t - t)"}, "t"), ParseError);
    CHECK_THROWS_AS(parse_fraction({"x"}, "t"), UnknownVariable);
}

TEST_CASE("points and scalars") {
    auto p = parse_point({"[1:sqrt(-1):0]"});
    CHECK(p[1] * p[1] == QuadExt(-1));
    CHECK(render_point(p) == "[1:sqrt(-1):0]");
    auto q = parse_point({" [ -1 : 0 : 1 ] "});
    CHECK(q[0] == QuadExt(-1));
    CHECK(render_point(q) == "[-1:0:1]");
    CHECK(parse_scalar({"1/2 - 3*i"}) == QuadExt::make(Rat(BigInt(1), BigInt(2)), -3, -1));
    CHECK(parse_scalar({"sqrt(8)"}) == QuadExt::make(0, 2, 2));
    CHECK_THROWS_AS(parse_point({"[0:0:0]"}), ParseError);
    CHECK_THROWS_AS(parse_point({"[1:2]"}), ParseError);
    CHECK_THROWS_AS(parse_point({"[sqrt(2):sqrt(3):1]"}), ParseError);
    CHECK_THROWS_AS(parse_point({"1:2:3"}), ParseError);
    auto z = parse_point({"[1 - 2*sqrt(3):0:1]"});
    CHECK(parse_point({render_point(z)}) == z);
}

TEST_CASE("curve input detection") {
    auto a = parse_curve({"y^2 = x^3 + x^2"});
    CHECK(a.affine);
    CHECK(render_poly(a.curve, kProjectiveNames) == "-X^3 - X^2*Z + Y^2*Z");
    auto b = parse_curve({"X^3 + Y^3 - Z^3"});
    CHECK_FALSE(b.affine);
    CHECK_THROWS_AS(parse_curve({"X^2 + Y"}), InputError);
    CHECK_THROWS_AS(parse_curve({"X*y"}), UnknownVariable);
    CHECK_THROWS_AS(parse_curve({"x - x"}), InputError);
}

TEST_CASE("render/parse round trip on random polynomials") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
    for (int k = 0; k < 1000; ++k) {
        TriPoly<Rat> p;
        int terms = static_cast<int>(rng() % 7);
        for (int i = 0; i < terms; ++i) {
            Monomial<3> m{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
            p.add_term(m, Rat(BigInt(num(rng)), BigInt(den(rng))));
        }
        std::string text = render_poly(p, kProjectiveNames);
        CHECK(parse_poly<3>({text}, kProjectiveNames) == p);
        UniPoly<Rat> u = cftest::random_poly<1>(rng, 6, 4, 30);
        CHECK(parse_poly<1>({render_poly(u, VarNames<1>{"t"})}, {"t"}) == u);
    }
}

TEST_CASE("arbitrary bytes never escape as anything but input errors") {
    std::mt19937_64 rng(22);
    const std::string alphabet = "XYZxyz0123456789+-*/^()= \n\t[]:.,;#~\x01\xff";
    int parsed = 0;
    for (int k = 0; k < 3000; ++k) {
        std::string s;
        int len = static_cast<int>(rng() % 24);
        for (int i = 0; i < len; ++i)
            s += (rng() % 4 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
        try {
            parse_poly<3>({s}, kProjectiveNames);
            ++parsed;
        } catch (const ParseError& e) {
            CHECK(e.line() >= 1);
            CHECK(e.column() >= 1);
        }
        try {
            parse_point({s});
        } catch (const InputError&) {
        }
        try {
            parse_fraction({s}, "t");
        } catch (const InputError&) {
        }
    }
    CHECK(parsed > 0);
}
