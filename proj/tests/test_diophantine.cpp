#include <map>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "curveforge/diophantine.hpp"
#include "curveforge/poly_ops.hpp"

using namespace curveforge;
using cftest::T;
using cftest::uni;

namespace {

using U = UniPoly<Rat>;

// Distinct complex roots of p, counted independently of radical(): the degree
// of p / gcd(p, p').
int distinct_roots(const U& p) {
    U g = gcd_poly(p, p.derivative(0));
    return divmod(p, g).first.degree().value();
}

}  // namespace

TEST_CASE("mason examples") {
    auto r = mason_check(T() * T(), uni({1, 0, -1}), uni({-1}));
    CHECK(r.deg_a == 2);
    CHECK(r.deg_b == 2);
    CHECK(r.deg_c == 0);
    CHECK(r.rad_degree == 3);
    CHECK(r.slack == 0);
    CHECK(r.holds);

    auto s = mason_check(T(), uni({1}), uni({-1, -1}));
    CHECK(s.holds);
    CHECK(s.slack == 0);

    CHECK_THROWS_AS(mason_check(T(), T(), T() * Rat(-2)), InputError);
    CHECK_THROWS_AS(mason_check(T(), uni({1}), T()), InputError);
    CHECK_THROWS_AS(mason_check(T(), U(), -T()), InputError);
    CHECK_THROWS_AS(mason_check(uni({1}), uni({1}), uni({-2})), InputError);
}

TEST_CASE("mason fuzz") {
    std::mt19937_64 rng(500);
    std::map<int, int> slack_histogram;
    int checked = 0;
    while (checked < 500) {
        auto A = cftest::random_poly<1>(rng, 6, 4, 4);
        auto B = cftest::random_poly<1>(rng, 6, 4, 4);
        if (A.is_zero() || B.is_zero() || (A + B).is_zero())
            continue;
        U g = gcd_poly(A, B);
        A = divmod(A, g).first;
        B = divmod(B, g).first;
        U C = -(A + B);
        if (A.degree() == Degree(0) && B.degree() == Degree(0) && C.degree() == Degree(0))
            continue;
        auto r = mason_check(A, B, C);
        int maxdeg = std::max({A.degree().value(), B.degree().value(), C.degree().value()});
        CHECK(r.rad_degree == distinct_roots(A * B * C));
        CHECK(maxdeg <= r.rad_degree - 1);
        CHECK(r.slack == r.rad_degree - 1 - maxdeg);
        ++slack_histogram[r.slack];
        ++checked;
    }
    std::string summary;
    for (const auto& [s, count] : slack_histogram)
        summary += " " + std::to_string(s) + ":" + std::to_string(count);
    MESSAGE("mason slack distribution (slack:count)" << summary);
}

TEST_CASE("polynomial fermat") {
    U x = uni({1, 0, -1}), y = uni({0, 2}), z = uni({1, 0, 1});
    CHECK(fermat_poly_check(x, y, z, 2).verdict == FermatReport::Verdict::Solution);
    CHECK(fermat_poly_check(T(), -T(), U(), 3).verdict == FermatReport::Verdict::Trivial);
    CHECK(fermat_poly_check(T(), uni({1}), T(), 3).verdict == FermatReport::Verdict::NotASolution);
    CHECK(fermat_poly_check(T() * Rat(3), T() * Rat(4), T() * Rat(5), 2).verdict == FermatReport::Verdict::Constant);
    CHECK_THROWS_AS(fermat_poly_check(T(), T(), T(), 1), InputError);
    // Scaling a Pythagorean solution by a common factor keeps it a solution.
    auto scaled = fermat_poly_check(x * uni({1, 1}), y * uni({1, 1}), z * uni({1, 1}), 2);
    CHECK(scaled.verdict == FermatReport::Verdict::Solution);
    CHECK(scaled.common == uni({1, 1}));
}

TEST_CASE("pell examples") {
    auto r = pell_bound_check(uni({-1, 0, 1}), std::make_pair(T(), uni({1})));
    CHECK(r.possible);
    CHECK(r.distinct_roots == 2);
    CHECK(r.bound == 2);
    CHECK(r.solution == PellReport::SolutionStatus::Verified);

    auto q = pell_bound_check(T().pow(4));
    CHECK(q.distinct_roots == 1);
    CHECK(q.bound == 0);
    CHECK_FALSE(q.possible);

    CHECK_FALSE(pell_bound_check(T() * T()).possible);
    CHECK_THROWS_AS(pell_bound_check(uni({5})), InputError);
    CHECK(pell_bound_check(uni({-1, 0, 1}), std::make_pair(T(), T())).solution ==
          PellReport::SolutionStatus::Invalid);
    CHECK(pell_bound_check(uni({-1, 0, 1}), std::make_pair(uni({-1}), U())).solution ==
          PellReport::SolutionStatus::Trivial);
}

TEST_CASE("pell soundness on constructed solutions") {
    std::mt19937_64 rng(100);
    int checked = 0;
    while (checked < 100) {
        auto X = cftest::random_poly<1>(rng, 4, 3, 5);
        if (X.is_zero() || X.degree() == Degree(0))
            continue;
        U D = X * X - uni({1});
        auto r = pell_bound_check(D, std::make_pair(X, uni({1})));
        CHECK(r.solution == PellReport::SolutionStatus::Verified);
        CHECK(r.possible);
        CHECK(r.distinct_roots == distinct_roots(D));
        CHECK(D.degree().value() <= 2 * r.distinct_roots - 2);
        ++checked;
    }
}

TEST_CASE("pell impossibility at low degree by brute force") {
    // D = T^2: X^2 - T^2*Y^2 = 1 has no solution with Y != 0 among small
    // integer-coefficient X, Y of degree <= 2.
    U D = T() * T();
    std::vector<U> small;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                small.push_back(uni({a, b, c}));
    int hits = 0;
    for (const auto& X : small)
        for (const auto& Y : small)
            if (!Y.is_zero() && (X * X - D * Y * Y - uni({1})).is_zero())
                ++hits;
    CHECK(hits == 0);
    CHECK_FALSE(pell_bound_check(D).possible);
}

TEST_CASE("local solvability examples") {
    auto c = local_solvability(2, 1, 3, 5);
    CHECK(c.m == 1);
    CHECK(c.n == 1);
    CHECK(c.e == 1);
    CHECK(c.witness == "2e");
    CHECK(c.witness_value == 2);
    CHECK(c.condition);
    CHECK(recheck_local(c));

    auto d = local_solvability(1, 2, 1, 3);
    CHECK(d.m == 1);
    CHECK(d.n == 0);
    CHECK(d.e == 1);
    CHECK_FALSE(d.condition);
    CHECK(recheck_local(d));

    CHECK_THROWS_AS(local_solvability(1, 1, 1, 2), InputError);
    CHECK_THROWS_AS(local_solvability(1, 1, 1, 9), InputError);
    CHECK_THROWS_AS(local_solvability(0, 1, 1, 5), InputError);
    CHECK_THROWS_AS(local_solvability(1, 1, 1, 10009), InputError);

    LocalCert bad = c;
    bad.e = 2;
    CHECK_FALSE(recheck_local(bad));
    bad = c;
    bad.witness_value = 3;
    CHECK_FALSE(recheck_local(bad));
}

TEST_CASE("local solvability when only the trivial point exists") {
    // Everything vanishes mod 3, so every point is singular and the condition
    // fails: the search ends without a certificate.
    CHECK_THROWS_AS(local_solvability(3, 3, 3, 3), Inconclusive);
}

TEST_CASE("local solvability agrees with the conic route") {
    std::mt19937_64 rng(20);
    std::uniform_int_distribution<long> coef(-30, 30);
    std::vector<std::array<long, 3>> triples;
    while (triples.size() < 20) {
        long b1 = coef(rng), a = coef(rng), b2 = coef(rng);
        if (b1 == 0 || b2 == 0 || a == 0 || a * a - 4 * b1 * b2 == 0)
            continue;
        triples.push_back({b1, a, b2});
    }
    LocalConfig cfg;
    cfg.cross_check = true;
    int with_condition = 0;
    for (std::int64_t p = 3; p < 100; p += 2) {
        bool prime = true;
        for (std::int64_t d = 3; d * d <= p; d += 2)
            prime = prime && p % d != 0;
        if (!prime)
            continue;
        for (const auto& [b1, a, b2] : triples) {
            BigInt product = BigInt(2) * a * b1 * b2 * (BigInt(a) * a - BigInt(4) * b1 * b2);
            bool condition = mpz_divisible_ui_p(product.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
            if (!condition) {
                try {
                    auto c = local_solvability(b1, a, b2, p, cfg);
                    CHECK(recheck_local(c));
                } catch (const Inconclusive&) {
                }
                continue;
            }
            ++with_condition;
            auto c = local_solvability(b1, a, b2, p, cfg);
            CHECK(c.condition);
            CHECK(recheck_local(c));
            CHECK(c.cross_check_found == std::optional<bool>(true));
        }
    }
    CHECK(with_condition > 400);
}
