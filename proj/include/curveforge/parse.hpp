#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "curveforge/polynomial.hpp"

namespace curveforge {

struct ExprSource {
    std::string text;
    std::string origin = "<input>";
};

/// Raised when an identifier is not among the declared variables; lets
/// callers retry with a different variable set.
class UnknownVariable : public ParseError {
public:
    using ParseError::ParseError;
};

template <std::size_t N>
using VarNames = std::array<std::string, N>;

inline const VarNames<3> kProjectiveNames{"X", "Y", "Z"};
inline const VarNames<2> kAffineNames{"x", "y"};
inline const VarNames<2> kFormNames{"u", "v"};
inline const VarNames<2> kFormNamesUpper{"U", "V"};

/// Grammar:
///   input  := expr [ '=' expr ]
///   expr   := term { ('+' | '-') term }
///   term   := factor { ('*' | '/') factor }
///   factor := ('+' | '-') factor | atom [ '^' INTEGER ]
///   atom   := INTEGER | NAME | '(' expr ')'
/// Division is allowed only by nonzero constants. Exponents are bare
/// non-negative integer literals. There is no implicit multiplication.
template <std::size_t N>
Polynomial<Rat, N> parse_poly(const ExprSource& src, const VarNames<N>& names);

/// A univariate rational function num/den in lowest terms, den monic.
/// Same grammar as parse_poly without '=', and division by any nonzero
/// polynomial.
std::pair<UniPoly<Rat>, UniPoly<Rat>> parse_fraction(const ExprSource& src, const std::string& var);

/// Scalar in Q or Q(sqrt d): integers, + - * / ^, parentheses, sqrt(r) for
/// rational r, and i for sqrt(-1).
QuadExt parse_scalar(const ExprSource& src);

/// "[a:b:c]" with scalar coordinates; rejects the zero triple.
std::array<QuadExt, 3> parse_point(const ExprSource& src);

/// Splits on a separator character at parenthesis depth zero.
std::vector<std::string> split_top_level(const std::string& text, char sep);

/// Graded-lex order, leading sign absorbed: "X^4 + 2*X^2*Y^2 - X", "0", "-X".
template <class K, std::size_t N>
std::string render_poly(const Polynomial<K, N>& p, const VarNames<N>& names);

/// "num", "num/den" with parentheses where needed; den == 1 is omitted.
std::string render_fraction(const UniPoly<Rat>& num, const UniPoly<Rat>& den, const std::string& var);

std::string render_point(const std::array<QuadExt, 3>& p);

/// A curve entered either projectively in X, Y, Z or affinely in x, y.
struct CurveInput {
    TriPoly<Rat> curve;
    bool affine = false;
    /// The affine polynomial when affine is set.
    BinaryForm<Rat> affine_poly;
};

/// Tries X, Y, Z first and falls back to x, y (homogenized with Z as the
/// new variable). A projective curve must be homogeneous.
CurveInput parse_curve(const ExprSource& src);

}  // namespace curveforge
