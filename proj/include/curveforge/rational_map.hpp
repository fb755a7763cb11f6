#pragma once

#include <string>

#include "curveforge/parse.hpp"
#include "curveforge/polynomial.hpp"

namespace curveforge {

/// Projective parametrization (f : g : h) by binary forms in (u, v) of one
/// common degree m >= 1 with gcd(f, g, h) = 1. Build through make_map.
template <ExactField K>
struct RationalMap {
    BinaryForm<K> f;
    BinaryForm<K> g;
    BinaryForm<K> h;

    int degree() const;
    const BinaryForm<K>& operator[](std::size_t i) const { return i == 0 ? f : (i == 1 ? g : h); }
};

/// gcd of the three forms (zero forms ignored); monic.
template <ExactField K>
BinaryForm<K> common_factor(const BinaryForm<K>& f, const BinaryForm<K>& g, const BinaryForm<K>& h);

/// Checks shape (homogeneous, equal degrees, not all zero), divides out the
/// common factor, and fixes the scalar: over Q the content is removed and the
/// sign makes the graded-lex leading coefficient of h positive (of g, then f,
/// when h is zero); irrational maps are scaled so that coefficient is 1.
/// Throws InputError for constant maps and malformed forms.
template <ExactField K>
RationalMap<K> make_map(const BinaryForm<K>& f, const BinaryForm<K>& g, const BinaryForm<K>& h);

/// F(f, g, h), a binary form of degree n*m or zero. F must be homogeneous.
template <ExactField K>
BinaryForm<K> substitute_forms(const TriPoly<K>& F, const RationalMap<K>& map);

template <ExactField K>
bool verify_param(const TriPoly<K>& F, const RationalMap<K>& map);

/// x(t) = x_num/x_den, y(t) = y_num/y_den in lowest terms with monic denominators.
struct AffineView {
    UniPoly<Rat> x_num, x_den;
    UniPoly<Rat> y_num, y_den;
};

/// The chart v = 1, t = u/v. Throws NotApplicable when h vanishes identically.
AffineView affine_view(const RationalMap<Rat>& map);

/// Clears denominators and homogenizes: x = f/h, y = g/h with h the least
/// common denominator.
RationalMap<Rat> map_from_affine(const AffineView& view);

/// "x(t);y(t)" (rational functions in t or T) or "f;g;h" (forms in u, v or U, V).
RationalMap<Rat> parse_map(const ExprSource& src);

/// "(f : g : h)" in u, v.
template <ExactField K>
std::string render_map(const RationalMap<K>& map);

/// "x = ..., y = ..." in t.
std::string render_affine(const AffineView& view);

}  // namespace curveforge
