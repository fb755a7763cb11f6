#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "curveforge/parametrize.hpp"
#include "curveforge/parse.hpp"
#include "curveforge/resultant.hpp"

using namespace curveforge;

namespace {

using P3 = TriPoly<Rat>;
using B2 = BinaryForm<Rat>;

P3 curve(const std::string& s) { return parse_curve({s}).curve; }
ProjPoint point(const std::string& s) { return parse_point({s}); }
RationalMap<Rat> map_of(const std::string& s) { return parse_map({s}); }
B2 form(const std::string& s) { return parse_poly<2>({s}, kFormNames); }

// Value of F at integer coordinates, by direct expansion of the terms.
Rat value_at(const P3& F, const std::array<Rat, 3>& p) {
    Rat acc;
    for (const auto& [m, c] : F.terms()) {
        Rat t = c;
        for (std::size_t i = 0; i < 3; ++i)
            for (int e = 0; e < m[i]; ++e)
                t *= p[i];
        acc += t;
    }
    return acc;
}

// Random nondegenerate conic through a random integer point with z = 1.
std::pair<P3, std::array<Rat, 3>> random_conic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-6, 6), pt(-4, 4);
    for (;;) {
        std::array<Rat, 3> P{Rat(pt(rng)), Rat(pt(rng)), Rat(1)};
        P3 F;
        for (const auto& m : {Monomial<3>{2, 0, 0}, Monomial<3>{1, 1, 0}, Monomial<3>{0, 2, 0},
                              Monomial<3>{1, 0, 1}, Monomial<3>{0, 1, 1}})
            F.add_term(m, Rat(c(rng)));
        F.add_term({0, 0, 2}, -value_at(F, P));
        if (F.degree() == Degree(2) && F.is_homogeneous() && !conic_is_degenerate(F))
            return {F, P};
    }
}

ProjPoint to_point(const std::array<Rat, 3>& p) { return {QuadExt(p[0]), QuadExt(p[1]), QuadExt(p[2])}; }

// Second intersection of the line P + s*D with the conic, from the expansion
// F(P + sD) = s*B + s^2*F(D) with B read off by evaluating at s = 1 and s = -1.
std::optional<std::array<Rat, 3>> second_point(const P3& F, const std::array<Rat, 3>& P,
                                               const std::array<Rat, 3>& D) {
    auto at = [&](const Rat& s) {
        return value_at(F, {P[0] + s * D[0], P[1] + s * D[1], P[2] + s * D[2]});
    };
    Rat FD = value_at(F, D);
    Rat B = (at(Rat(1)) - at(Rat(-1))) / Rat(2);
    if (FD.is_zero() || B.is_zero())
        return std::nullopt;
    Rat s = -B / FD;
    return std::array<Rat, 3>{P[0] + s * D[0], P[1] + s * D[1], P[2] + s * D[2]};
}

bool proportional(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return (a[0] * b[1] - a[1] * b[0]).is_zero() && (a[0] * b[2] - a[2] * b[0]).is_zero() &&
           (a[1] * b[2] - a[2] * b[1]).is_zero();
}

std::array<Rat, 3> map_at(const RationalMap<Rat>& m, const Rat& u, const Rat& v) {
    return {m.f.evaluate<Rat>({u, v}), m.g.evaluate<Rat>({u, v}), m.h.evaluate<Rat>({u, v})};
}

// Some (u : v) with rational ratio maps onto Q: the cross product of Q with
// the map is a triple of binary forms whose common root is the parameter.
bool hits(const RationalMap<Rat>& m, const std::array<Rat, 3>& Q) {
    std::array<B2, 3> cross{m.g * Q[2] - m.h * Q[1], m.h * Q[0] - m.f * Q[2], m.f * Q[1] - m.g * Q[0]};
    B2 g;
    for (const auto& c : cross)
        if (!c.is_zero())
            g = g.is_zero() ? c : gcd_form(g, c);
    if (g.is_zero() || g.degree() == Degree(0))
        return false;
    if (proportional(map_at(m, Rat(1), Rat(0)), Q))
        return true;
    UniPoly<Rat> r = dehomogenize_form(g);
    for (const auto& f : split_low_degree_factors(radical(r), 1).factors) {
        Rat t = -f.constant_term();
        if (proportional(map_at(m, t, Rat(1)), Q))
            return true;
    }
    return false;
}

RationalMap<Rat> rational(const RationalMap<QuadExt>& m) {
    auto r = rational_map(m);
    REQUIRE(r);
    return *r;
}

}  // namespace

TEST_CASE("param_conic examples") {
    auto circle = rational(param_conic(curve("X^2 + Y^2 - Z^2"), point("[-1:0:1]")));
    CHECK(circle.f == form("v^2 - u^2"));
    CHECK(circle.g == form("2*u*v"));
    CHECK(circle.h == form("u^2 + v^2"));
    CHECK(render_affine(affine_view(circle)) == "x = (-t^2 + 1)/(t^2 + 1), y = 2*t/(t^2 + 1)");

    auto parabola = rational(param_conic(curve("Y*Z - X^2"), point("[0:0:1]")));
    CHECK(render_affine(affine_view(parabola)) == "x = t, y = t^2");

    CHECK_THROWS_AS(param_conic(curve("X*Y"), point("[0:0:1]")), NotApplicable);
    CHECK_THROWS_AS(param_conic(curve("X^2 + Y^2 - Z^2"), point("[1:1:1]")), InputError);
    CHECK_THROWS_AS(param_conic(curve("X^3 - Y^2*Z"), point("[0:0:1]")), InputError);
}

TEST_CASE("param_conic over a quadratic field") {
    P3 F = curve("X^2 + Y^2 - 3*Z^2");
    ProjPoint P{QuadExt::make(0, 1, 3), QuadExt(0), QuadExt(1)};
    auto m = param_conic(F, P);
    CHECK(verify_param(convert<QuadExt>(F), m));
    CHECK_FALSE(rational_map(m).has_value());
    CHECK(field_of(m.f) == 3);
}

TEST_CASE("param_conic round trip and coverage on random conics") {
    std::mt19937_64 rng(1201);
    std::uniform_int_distribution<long> dir(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        auto [F, P] = random_conic(rng);
        auto m = rational(param_conic(F, to_point(P)));
        REQUIRE(verify_param(F, m));
        CHECK(m.degree() == 2);
        CHECK(common_factor(m.f, m.g, m.h).degree() == Degree(0));
        CHECK(hits(m, P));
        if (!m.h.is_zero()) {
            auto implicit = implicitize(affine_view(m));
            CHECK(implicit == primitive_normalized(dehomogenize(F, 2)));
        }
        for (int k = 0; k < 3; ++k) {
            auto Q = second_point(F, P, {Rat(dir(rng)), Rat(dir(rng)), Rat(dir(rng))});
            if (Q)
                CHECK(hits(m, *Q));
        }
    }
}

TEST_CASE("param_split_degree examples") {
    auto cubic = param_split_degree(parse_curve({"y^2 = x^3 + x^2"}).affine_poly);
    CHECK(render_affine(affine_view(cubic)) == "x = t^2 - 1, y = t^3 - t");

    auto quartic = param_split_degree(parse_curve({"x^4 - x^2*y^2 + y^3"}).affine_poly);
    auto v = affine_view(quartic);
    CHECK(render_affine(v) == "x = t^3/(t^2 - 1), y = t^4/(t^2 - 1)");
    CHECK(verify_param(curve("X^4 - X^2*Y^2 + Y^3*Z"), quartic));

    CHECK_THROWS_AS(param_split_degree(parse_curve({"(x^2 + y^2)^2 - (x^2 - y^2)"}).affine_poly), NotApplicable);
    CHECK_THROWS_AS(param_split_degree(parse_curve({"x + y"}).affine_poly), NotApplicable);
}

TEST_CASE("split-degree outputs implicitize back to the curve") {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 4)(rng);
        auto top = cftest::random_form<2>(rng, n, 3);
        auto next = cftest::random_form<2>(rng, n - 1, 2);
        if (top.is_zero() || next.is_zero())
            continue;
        B2 f = top + next;
        RationalMap<Rat> m;
        try {
            m = param_split_degree(f);
        } catch (const NotApplicable&) {
            continue;
        } catch (const InputError&) {
            continue;  // F_{n-1}(1,t) = 0 gives a constant map
        }
        REQUIRE(verify_param(homogenize(f), m));
        auto implicit = implicitize(affine_view(m));
        // The image is an irreducible component of f = 0.
        CHECK(divide_exact(primitive_normalized(f), implicit).has_value());
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("three-node quartic") {
    P3 F = curve("X^2*Y^2 - Y^2*Z^2 - X^2*Z^2");
    std::array<ProjPoint, 3> nodes{point("[1:0:0]"), point("[0:1:0]"), point("[0:0:1]")};
    auto r = param_quartic_three_nodes(F, nodes);
    CHECK(r.conic == curve("X^2 + Y^2 - Z^2"));
    CHECK(r.conic_point == point("[1:0:1]"));
    CHECK(r.map.degree() == 4);
    CHECK(verify_param(F, r.map));
    CHECK(common_factor(r.map.f, r.map.g, r.map.h).degree() == Degree(0));
    CHECK(r.map.f == form("2*u*v*(u^2 + v^2)"));
    CHECK(r.map.g == form("(v^2 - u^2)*(u^2 + v^2)"));
    CHECK(r.map.h == form("2*u*v*(u^2 - v^2)"));
    // The sign-flipped variant is an equally valid parametrization.
    CHECK(verify_param(F, make_map(form("2*u*v*(u^2 + v^2)"), form("(v^2 - u^2)*(u^2 + v^2)"),
                                   form("2*u*v*(v^2 - u^2)"))));

    try {
        param_quartic_three_nodes(curve("X^2*Y^2 + Y^2*Z^2 + X^2*Z^2"), nodes);
        FAIL("expected NoRationalPoint");
    } catch (const NoRationalPoint& e) {
        CHECK(e.conic() == curve("X^2 + Y^2 + Z^2"));
    }

    std::array<ProjPoint, 3> lem{point("[0:0:1]"), point("[1:i:0]"), point("[1:-i:0]")};
    CHECK_THROWS_AS(param_quartic_three_nodes(curve("(X^2 + Y^2)^2 - (X^2 - Y^2)*Z^2"), lem), NotApplicable);

    std::array<ProjPoint, 3> collinear{point("[1:0:0]"), point("[0:1:0]"), point("[1:1:0]")};
    CHECK_THROWS_AS(param_quartic_three_nodes(curve("Z^2*(X^2 + Y^2 - Z^2)"), collinear), NotApplicable);

    std::array<ProjPoint, 3> triple{point("[0:0:1]"), point("[1:0:0]"), point("[0:1:0]")};
    CHECK_THROWS_AS(param_quartic_three_nodes(curve("X^4 + Y^4 + X^3*Z - Y^3*Z"), triple), NotApplicable);
    CHECK_THROWS_AS(param_quartic_three_nodes(F, {point("[1:1:1]"), nodes[1], nodes[2]}), NotApplicable);
}

TEST_CASE("three-node quartic under random coordinate changes") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> e(-2, 2);
    P3 F = curve("X^2*Y^2 - Y^2*Z^2 - X^2*Z^2");
    int done = 0;
    for (int trial = 0; trial < 30 && done < 10; ++trial) {
        Matrix3 M;
        for (auto& row : M)
            for (auto& x : row)
                x = Rat(e(rng));
        Rat det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (det.is_zero())
            continue;
        // Adjugate over det: G(v) = F(M^-1 v) has its nodes at the columns of M.
        Matrix3 inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                inv[i][j] = (M[r0][c0] * M[r1][c1] - M[r0][c1] * M[r1][c0]) / det;
            }
        P3 G = transform_curve(F, inv);
        std::array<ProjPoint, 3> nodes;
        for (std::size_t k = 0; k < 3; ++k)
            nodes[k] = {QuadExt(M[0][k]), QuadExt(M[1][k]), QuadExt(M[2][k])};
        try {
            auto r = param_quartic_three_nodes(G, nodes);
            CHECK(verify_param(G, r.map));
            CHECK(r.map.degree() == 4);
            ++done;
        } catch (const NoRationalPoint&) {
        }
    }
    CHECK(done >= 5);
}

TEST_CASE("find_rational_point ordering") {
    CHECK(find_rational_point(curve("X^2 + Y^2 - Z^2"), 5) == point("[1:0:1]"));
    CHECK(find_rational_point(curve("X^2 + Y^2 - 25*Z^2"), 5) == point("[4:3:1]"));
    CHECK_FALSE(find_rational_point(curve("X^2 + Y^2 + Z^2"), 20).has_value());
    CHECK_FALSE(find_rational_point(curve("X^2 + Y^2 - 3*Z^2"), 20).has_value());
}

TEST_CASE("kapferer witness examples") {
    P3 circle = curve("X^2 + Y^2 - Z^2");
    auto w = kapferer_witness(circle, map_of("v^2 - u^2; 2*u*v; u^2 + v^2"));
    CHECK(w.complete);
    CHECK(w.gcd.degree() == Degree(0));
    CHECK(w.p.degree() == Degree(0));
    CHECK(w.minor_degree == 2);
    CHECK(w.partial_degree == 2);
    CHECK(w.degree_law_holds);

    P3 cubic = curve("X^3 + X^2*Z - Y^2*Z");
    auto c = kapferer_witness(cubic, map_of("(u^2 - v^2)*v; u*(u^2 - v^2); v^3"));
    CHECK_FALSE(c.complete);
    CHECK(c.gcd == form("u^2 - v^2"));
    CHECK(c.evaluated[2] == form("-(u^2 - v^2)^3"));
    CHECK(c.evaluated[1] == form("-2*u*(u^2 - v^2)*v^3"));
    CHECK(c.evaluated[0] == form("(u^2 - v^2)*v^2*(3*u^2 - v^2)"));
    REQUIRE(c.singular_points.size() == 1);
    CHECK(c.singular_points[0] == point("[0:0:1]"));
    CHECK(c.minor_degree == 4);
    CHECK(c.partial_degree == 6);
    CHECK_FALSE(c.degree_law_holds);

    CHECK_THROWS_AS(kapferer_witness(curve("X^3 + Y^3 - Z^3"), map_of("t;t")), InputError);
}

TEST_CASE("kapferer witness on random conic and line maps") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        auto [F, P] = random_conic(rng);
        auto m = rational(param_conic(F, to_point(P)));
        auto w = kapferer_witness(F, m);
        CHECK(w.complete);
        CHECK(w.degree_law_holds);
        // Minors against p times the evaluated partials, recomputed here.
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(w.minors[k] == w.p * compose(F.derivative(k), std::array<B2, 3>{m.f, m.g, m.h}));
        bool any = false;
        for (const auto& mk : w.minors)
            any = any || !mk.is_zero();
        CHECK(any);
    }
    // Lines: any coprime map into aX + bY + cZ = 0.
    for (int trial = 0; trial < 20; ++trial) {
        int mdeg = std::uniform_int_distribution<int>(1, 4)(rng);
        auto f = cftest::random_form<2>(rng, mdeg, 3);
        auto g = cftest::random_form<2>(rng, mdeg, 3);
        if (f.is_zero() || g.is_zero())
            continue;
        B2 h = -(f * Rat(2) + g * Rat(3));
        RationalMap<Rat> m;
        try {
            m = make_map(f, g, h);
        } catch (const InputError&) {
            continue;
        }
        auto w = kapferer_witness(curve("2*X + 3*Y + Z"), m);
        CHECK(w.complete);
        CHECK(w.degree_law_holds);
    }
}

TEST_CASE("non-parametrization certificate") {
    auto fermat = nonparam_certificate(curve("X^3 + Y^3 - Z^3"));
    CHECK(fermat.status == CertificateOutcome::Status::Certified);
    CHECK(fermat.degree == 3);
    REQUIRE(fermat.evidence);
    CHECK(evidence_conclusive(*fermat.evidence));

    auto elliptic = nonparam_certificate(curve("Y^2*Z - X^3 + X*Z^2"));
    CHECK(elliptic.status == CertificateOutcome::Status::Certified);

    auto nodal = nonparam_certificate(curve("X^3 + X^2*Z - Y^2*Z"));
    CHECK(nodal.status == CertificateOutcome::Status::Singular);
    REQUIRE(nodal.witness);
    CHECK(nodal.witness->point == point("[0:0:1]"));

    CHECK(nonparam_certificate(curve("X^2 + Y^2 - Z^2")).status == CertificateOutcome::Status::Inapplicable);
}

TEST_CASE("loop area") {
    auto m = map_of("t^2 - 1; t^3 - t");
    CHECK(loop_area(m, Rat(-1), Rat(1)) == Rat(8, 15));
    CHECK(loop_area(m, Rat(3, 7), Rat(3, 7)) == Rat(0));
    CHECK(loop_area(map_of("t; t"), Rat(0), Rat(1)) == Rat(1, 2));
    CHECK_THROWS_AS(loop_area(map_of("1/(t^2 + 1); t"), Rat(0), Rat(1)), NotApplicable);
}

TEST_CASE("pythagorean triples") {
    using A = std::array<BigInt, 3>;
    CHECK(pythagorean_triple(2, 1) == A{3, 4, 5});
    CHECK(pythagorean_triple(1, 1) == A{0, 2, 2});
    CHECK(pythagorean_triple(3, 2) == A{5, 12, 13});
}
