#pragma once

#include <initializer_list>
#include <random>

#include "curveforge/polynomial.hpp"

namespace cftest {

using namespace curveforge;

/// Univariate polynomial from ascending integer coefficients.
inline UniPoly<Rat> uni(std::initializer_list<long> coeffs) {
    UniPoly<Rat> p;
    int e = 0;
    for (long c : coeffs)
        p.add_term({e++}, Rat(c));
    return p;
}

inline UniPoly<Rat> T() { return UniPoly<Rat>::variable(0); }

template <std::size_t N>
Polynomial<Rat, N> random_poly(std::mt19937_64& rng, int max_degree, int terms, long range = 5) {
    std::uniform_int_distribution<long> coef(-range, range);
    Polynomial<Rat, N> p;
    for (int i = 0; i < terms; ++i) {
        Monomial<N> m{};
        int budget = max_degree;
        for (std::size_t v = 0; v < N; ++v) {
            m[v] = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= m[v];
        }
        p.add_term(m, Rat(coef(rng)));
    }
    return p;
}

/// Random homogeneous polynomial of exact degree d (may be zero).
template <std::size_t N>
Polynomial<Rat, N> random_form(std::mt19937_64& rng, int d, int terms, long range = 5) {
    std::uniform_int_distribution<long> coef(-range, range);
    Polynomial<Rat, N> p;
    for (int i = 0; i < terms; ++i) {
        Monomial<N> m{};
        int budget = d;
        for (std::size_t v = 0; v + 1 < N; ++v) {
            m[v] = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= m[v];
        }
        m[N - 1] = budget;
        p.add_term(m, Rat(coef(rng)));
    }
    return p;
}

}  // namespace cftest
