#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveforge/polynomial.hpp"

namespace curveforge {

// ---------------------------------------------------------------------------
// Univariate arithmetic
// ---------------------------------------------------------------------------

/// Quotient and remainder; throws InputError for a zero divisor.
template <ExactField K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b);

template <ExactField K>
UniPoly<K> make_monic(const UniPoly<K>& a);

/// Monic gcd. Over Q this runs a primitive pseudo-remainder sequence on
/// integer coefficients; over Q(sqrt d) it is plain Euclid. Throws
/// InputError when both inputs are zero.
template <ExactField K>
UniPoly<K> gcd_poly(const UniPoly<K>& a, const UniPoly<K>& b);

/// Squarefree part a / gcd(a, a'), monic. Throws InputError on zero.
template <ExactField K>
UniPoly<K> radical(const UniPoly<K>& a);

/// Yun's decomposition: a = lc(a) * prod s_i^i with s_i monic, squarefree
/// and pairwise coprime. Entry i-1 holds s_i (possibly 1).
template <ExactField K>
std::vector<UniPoly<K>> squarefree_decomposition(const UniPoly<K>& a);

template <ExactField K>
K evaluate(const UniPoly<K>& p, const K& x) {
    return p.evaluate(std::array<K, 1>{x});
}

/// Antiderivative with zero constant term.
UniPoly<Rat> poly_integrate(const UniPoly<Rat>& p);

/// Roots of a polynomial of degree 1 or 2 in the coefficient field or in a
/// quadratic extension of Q. Returns nullopt when a root would need a field
/// beyond Q(sqrt d) (for example a quadratic over Q(i) with irrational
/// discriminant), or when the degree is not 1 or 2.
template <ExactField K>
std::optional<std::vector<QuadExt>> low_degree_roots(const UniPoly<K>& p);

// ---------------------------------------------------------------------------
// Multivariate helpers
// ---------------------------------------------------------------------------

/// a / b when b divides a exactly, nullopt otherwise.
template <ExactField K, std::size_t N>
std::optional<Polynomial<K, N>> divide_exact(const Polynomial<K, N>& a, const Polynomial<K, N>& b);

/// Positive rational c with p / c having coprime integer coefficients.
template <std::size_t N>
Rat content(const Polynomial<Rat, N>& p);

/// Primitive integer polynomial with positive leading (graded-lex) coefficient.
template <std::size_t N>
Polynomial<Rat, N> primitive_normalized(const Polynomial<Rat, N>& p);

/// Exact k-th root when p is (up to sign) a perfect k-th power of a
/// polynomial with rational coefficients; nullopt otherwise.
template <std::size_t N>
std::optional<Polynomial<Rat, N>> exact_root(const Polynomial<Rat, N>& p, int k);

// ---------------------------------------------------------------------------
// Binary forms (homogeneous in (U, V))
// ---------------------------------------------------------------------------

/// f(t, 1).
template <ExactField K>
UniPoly<K> dehomogenize_form(const BinaryForm<K>& f);

/// V^degree * p(U / V).
template <ExactField K>
BinaryForm<K> homogenize_univariate(const UniPoly<K>& p, int degree);

/// Monic (graded-lex) gcd of two binary forms; a zero input acts as identity.
template <ExactField K>
BinaryForm<K> gcd_form(const BinaryForm<K>& a, const BinaryForm<K>& b);

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

/// Partial derivative by variable name; throws InputError for an unknown name.
template <ExactField K, std::size_t N>
Polynomial<K, N> partial_derivative(const Polynomial<K, N>& p, const std::string& var,
                                    const std::array<std::string, N>& names) {
    for (std::size_t i = 0; i < N; ++i)
        if (names[i] == var)
            return p.derivative(i);
    throw InputError("unknown variable '" + var + "'");
}

/// Affine f(x, y) to projective F(X, Y, Z) of the same degree, new variable last.
template <ExactField K>
TriPoly<K> homogenize(const BinaryForm<K>& f) {
    if (f.is_zero())
        throw InputError("cannot homogenize the zero polynomial");
    return homogenize_to(f, 2, f.degree().value());
}

/// Sets variable `var` to 1, keeping the other two in order.
template <ExactField K>
BinaryForm<K> dehomogenize(const TriPoly<K>& F, std::size_t var) {
    return drop_variable(F, var, K(1));
}

// ---------------------------------------------------------------------------
// Factorization over Q
// ---------------------------------------------------------------------------

struct FactorConfig {
    int degree_cap = 12;
    /// Upper bound on divisor combinations tried per Kronecker step.
    std::uint64_t divisor_budget = 200000;
};

struct Factorization {
    /// Leading coefficient of the input.
    Rat content;
    /// Monic Q-irreducible factors with multiplicities, sorted by degree and
    /// then by graded-lex coefficients.
    std::vector<std::pair<UniPoly<Rat>, int>> factors;
};

/// Complete factorization by squarefree decomposition plus Kronecker's
/// method. Throws Inconclusive above the degree cap or the divisor budget.
Factorization kronecker_factor(const UniPoly<Rat>& a, const FactorConfig& config = {});

struct LowDegreeSplit {
    /// Monic irreducible factors of degree <= the requested bound.
    std::vector<UniPoly<Rat>> factors;
    /// Monic cofactor with no factor of degree <= the bound.
    UniPoly<Rat> rest;
};

/// Peels off every irreducible factor of degree <= max_degree from a
/// nonzero squarefree polynomial. No degree cap applies.
LowDegreeSplit split_low_degree_factors(const UniPoly<Rat>& squarefree, int max_degree,
                                        const FactorConfig& config = {});

/// Full factorization of an integer (trial division plus Pollard rho).
std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n);

}  // namespace curveforge
