#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curveforge/poly_ops.hpp"
#include "curveforge/polynomial.hpp"

namespace curveforge {

using ProjPoint = std::array<QuadExt, 3>;

/// Scales the first nonzero coordinate to 1. Throws InputError for the zero
/// triple and IncompatibleField for mixed radicals.
ProjPoint normalize_point(const ProjPoint& p);

/// Common quadratic field of the coordinates (0 for rational points).
std::int64_t point_field(const ProjPoint& p);

ProjPoint conjugate_point(const ProjPoint& p);

enum class ConeKind { Smooth, Node, Cusp, ConjugateNode, Higher };

std::string to_string(ConeKind kind);

struct ConeInfo {
    int multiplicity = 0;
    /// Index of the coordinate set to 1 for the affine chart.
    std::size_t chart = 2;
    /// The lowest-degree part after moving the point to the origin, in the
    /// two remaining coordinates (original order).
    BinaryForm<QuadExt> cone;
    ConeKind kind = ConeKind::Higher;
    /// False for a cusp whose tangent also divides the cubic part (a tacnode
    /// or a higher cusp), which counts as more than one double point.
    bool ordinary = true;
    /// Node tangents as linear forms in the chart coordinates.
    std::vector<BinaryForm<QuadExt>> tangents;
    /// Field of the tangent slopes for a conjugate-tangent node; 0 if unknown.
    std::int64_t tangent_field = 0;
};

struct SingularPointReport {
    ProjPoint point;
    std::int64_t field = 0;
    ConeInfo cone;
    std::optional<ProjPoint> conjugate_partner;
};

struct SingularLocus {
    /// Sorted by the normalized coordinates.
    std::vector<SingularPointReport> points;
    /// Degrees of eliminant parts whose points could not be resolved within
    /// a quadratic field.
    std::vector<int> clusters;
};

struct SingularConfig {
    int degree_cap = 8;
    FactorConfig factor;
};

/// Names of the two chart coordinates for a given chart index.
std::array<std::string, 2> chart_names(std::size_t chart);

/// All three partial derivatives vanish at P. Requires homogeneous F of degree >= 1.
bool is_singular_at(const TriPoly<Rat>& F, const ProjPoint& P);

/// Multiplicity and tangent cone at a point of the curve; throws InputError
/// if P is not on F.
ConeInfo multiplicity_and_cone(const TriPoly<Rat>& F, const ProjPoint& P);

/// True when F has no repeated factor.
bool is_squarefree_curve(const TriPoly<Rat>& F);

/// Singular points over Q and quadratic fields, by pairwise elimination of
/// the partials and back-substitution along lines through a coordinate point.
/// Throws InputError for non-homogeneous or non-squarefree F and
/// Inconclusive above the degree cap.
SingularLocus enumerate_singular_points(const TriPoly<Rat>& F, const SingularConfig& config = {});

struct GenusReport {
    int genus = 0;
    int degree = 0;
    int double_points = 0;
    int bound = 0;
    std::vector<std::string> diagnostics;
};

/// (d-1)(d-2)/2 - r for curves whose singularities are all double points.
/// Throws NotApplicable for higher multiplicities, detected reducibility, or
/// too many double points; Inconclusive for unresolved clusters.
GenusReport genus(const TriPoly<Rat>& F, const SingularLocus& locus);

/// Projective change of coordinates: the curve becomes F(M * (X, Y, Z)^T).
using Matrix3 = std::array<std::array<Rat, 3>, 3>;

TriPoly<Rat> transform_curve(const TriPoly<Rat>& F, const Matrix3& M);

struct NonsingularityEvidence {
    /// Per direction (eliminating X, Y, Z): gcd of the pairwise resultants of
    /// the partials, a binary form in the two remaining coordinates; nullopt
    /// when every pair was degenerate.
    std::array<std::optional<BinaryForm<Rat>>, 3> eliminants;
    /// Whether each coordinate point is a common zero of the partials.
    std::array<bool, 3> center_singular{};
    /// Coordinate change applied before computing the eliminants.
    std::optional<Matrix3> coordinate_change;
};

struct NonsingularityResult {
    enum class Outcome { Nonsingular, Singular, Inconclusive };
    Outcome outcome = Outcome::Inconclusive;
    std::optional<NonsingularityEvidence> evidence;
    /// A singular point, when one was found.
    std::optional<SingularPointReport> witness;
    /// Degree of the unresolved cluster for an inconclusive outcome.
    int cluster_degree = 0;
    std::string detail;
};

/// The eliminants for F (after an optional coordinate change).
NonsingularityEvidence compute_evidence(const TriPoly<Rat>& F, const std::optional<Matrix3>& change);

/// The evidence rules out common zeros of the partials.
bool evidence_conclusive(const NonsingularityEvidence& e);

/// Recomputes the eliminants from F and compares with the stored ones.
bool recheck_evidence(const TriPoly<Rat>& F, const NonsingularityEvidence& e);

NonsingularityResult nonsingularity_certificate(const TriPoly<Rat>& F, const SingularConfig& config = {});

}  // namespace curveforge
