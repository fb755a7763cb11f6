#pragma once

#include <vector>

#include "curveforge/polynomial.hpp"
#include "curveforge/rational_map.hpp"

namespace curveforge {

/// Sylvester matrix of A and B viewed as polynomials in `var`: deg B rows of
/// A's coefficients, then deg A rows of B's, each in descending powers and
/// shifted one column per row. Entries no longer involve `var`.
template <ExactField K, std::size_t N>
std::vector<std::vector<Polynomial<K, N>>> sylvester_matrix(const Polynomial<K, N>& A, const Polynomial<K, N>& B,
                                                            std::size_t var);

/// Determinant by fraction-free Bareiss elimination with exact division.
template <ExactField K, std::size_t N>
Polynomial<K, N> bareiss_determinant(std::vector<std::vector<Polynomial<K, N>>> M);

/// Res_var(A, B) = det of the Sylvester matrix, so Res_T(T - a, T - b) = a - b.
/// Throws InputError when A or B has degree 0 in var.
template <ExactField K, std::size_t N>
Polynomial<K, N> resultant_in(const Polynomial<K, N>& A, const Polynomial<K, N>& B, std::size_t var);

/// Implicit equation f(x, y) = 0 of an affine parametrization: the resultant
/// Res_t(h*x - f1, h*y - f2), made primitive with positive graded-lex leading
/// coefficient; a perfect power P^k is returned as P.
BinaryForm<Rat> implicitize(const AffineView& view);

}  // namespace curveforge
