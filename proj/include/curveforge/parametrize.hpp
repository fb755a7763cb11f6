#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "curveforge/rational_map.hpp"
#include "curveforge/singular.hpp"

namespace curveforge {

/// Symmetric-matrix determinant test: a ternary quadratic form is a product
/// of two linear forms (over the algebraic closure) iff the determinant is 0.
bool conic_is_degenerate(const TriPoly<Rat>& F);

/// Lines through P on an irreducible conic. With Q(u, v) = v*e_i + u*e_j for
/// the first coordinate pair (X,Y), (X,Z), (Y,Z) independent of P, the map is
/// F(Q)*P - (grad F(P) . Q)*Q, normalized. Throws InputError when P is not on
/// F or F is not a conic, NotApplicable when F is a line pair.
RationalMap<QuadExt> param_conic(const TriPoly<Rat>& F, const ProjPoint& P);

/// The map over Q when all its coefficients are rational.
std::optional<RationalMap<Rat>> rational_map(const RationalMap<QuadExt>& map);

/// Curves F = F_n + F_{n-1} (affine, in x and y): x = -F_{n-1}(1,t)/F_n(1,t),
/// y = t*x. Throws NotApplicable when other degrees occur.
RationalMap<Rat> param_split_degree(const BinaryForm<Rat>& f);

struct QuarticConfig {
    int height_bound = 50;
};

/// Raised when the Cremona-image conic has no rational point in the search
/// range; carries the conic in the original working coordinates.
class NoRationalPoint : public Inconclusive {
public:
    NoRationalPoint(const std::string& message, TriPoly<Rat> conic)
        : Inconclusive(message), conic_(std::move(conic)) {}
    const TriPoly<Rat>& conic() const noexcept { return conic_; }

private:
    TriPoly<Rat> conic_;
};

/// First point of F with integer coordinates of height <= bound, searching by
/// height and then in descending lexicographic order of (x, y, z) with the
/// first nonzero coordinate positive.
std::optional<ProjPoint> find_rational_point(const TriPoly<Rat>& F, int height_bound);

struct QuarticParametrization {
    RationalMap<Rat> map;
    Matrix3 change;
    TriPoly<Rat> transformed;
    TriPoly<Rat> conic;
    ProjPoint conic_point;
};

/// Quartic with three rational double points: move the nodes to the
/// coordinate points, apply the Cremona map to get a conic, parametrize it
/// and map back. Errors: NotApplicable (irrational, collinear or non-double
/// nodes, wrong shape), NoRationalPoint (conic search exhausted).
QuarticParametrization param_quartic_three_nodes(const TriPoly<Rat>& F, const std::array<ProjPoint, 3>& nodes,
                                                 const QuarticConfig& config = {});

struct KapfererWitness {
    /// P = g_U h_V - g_V h_U, Q = -(f_U h_V - f_V h_U), R = f_U g_V - f_V g_U.
    std::array<BinaryForm<Rat>, 3> minors;
    /// F_X(f,g,h), F_Y(f,g,h), F_Z(f,g,h).
    std::array<BinaryForm<Rat>, 3> evaluated;
    BinaryForm<Rat> gcd;
    /// Set when the gcd is constant and q * minor_i = p * evaluated_i holds.
    bool complete = false;
    BinaryForm<Rat> p;
    BinaryForm<Rat> q;
    int curve_degree = 0;
    int map_degree = 0;
    /// 2m - 2 and m(n - 1).
    int minor_degree = 0;
    int partial_degree = 0;
    bool degree_law_holds = false;
    /// Singular points recovered from the roots of a nonconstant gcd.
    std::vector<ProjPoint> singular_points;
    /// Degree of gcd factors whose roots lie outside quadratic fields.
    int unresolved_degree = 0;
};

/// Throws InputError when the map does not parametrize F, and
/// TheoremContradiction when the proof's identities fail.
KapfererWitness kapferer_witness(const TriPoly<Rat>& F, const RationalMap<Rat>& map);

struct CertificateOutcome {
    enum class Status { Certified, Inapplicable, Singular };
    Status status = Status::Inapplicable;
    int degree = 0;
    std::optional<NonsingularityEvidence> evidence;
    std::optional<SingularPointReport> witness;
    std::string conclusion;
};

/// Non-parametrizability for smooth curves of degree >= 3. Throws
/// Inconclusive when smoothness cannot be decided.
CertificateOutcome nonparam_certificate(const TriPoly<Rat>& F, const SingularConfig& config = {});

/// |integral from t0 to t1 of y(t) x'(t) dt| for a polynomial affine view.
Rat loop_area(const RationalMap<Rat>& map, const Rat& t0, const Rat& t1);

/// (m^2 - n^2, 2mn, m^2 + n^2).
std::array<BigInt, 3> pythagorean_triple(const BigInt& m, const BigInt& n);

}  // namespace curveforge
