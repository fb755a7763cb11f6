#include "curveforge/singular.hpp"

#include <algorithm>

#include "curveforge/parse.hpp"
#include "curveforge/resultant.hpp"

namespace curveforge {

namespace {

using Gradient = std::array<TriPoly<Rat>, 3>;

Gradient gradient(const TriPoly<Rat>& F) { return {F.derivative(0), F.derivative(1), F.derivative(2)}; }

/// The two coordinates other than v, in order.
std::array<std::size_t, 2> others(std::size_t v) {
    if (v == 0)
        return {1, 2};
    if (v == 1)
        return {0, 2};
    return {0, 1};
}

void require_curve(const TriPoly<Rat>& F) {
    if (F.is_zero() || F.is_constant())
        throw InputError("a curve needs a homogeneous polynomial of degree >= 1");
    if (!F.is_homogeneous())
        throw InputError("curve polynomial is not homogeneous");
}

ProjPoint unit_point(std::size_t i) {
    ProjPoint p{QuadExt(0), QuadExt(0), QuadExt(0)};
    p[i] = QuadExt(1);
    return p;
}

/// G(a, 1, v) with variables ordered (a, v).
Polynomial<Rat, 2> chart_in(const TriPoly<Rat>& G, std::size_t a, std::size_t v) {
    Polynomial<Rat, 2> r;
    for (const auto& [m, c] : G.terms())
        r.add_term({m[a], m[v]}, c);
    return r;
}

/// A polynomial free of the third variable as a form in (a, b).
BinaryForm<Rat> as_form(const TriPoly<Rat>& G, std::size_t a, std::size_t b) {
    BinaryForm<Rat> r;
    for (const auto& [m, c] : G.terms())
        r.add_term({m[a], m[b]}, c);
    return r;
}

/// Binary form in the coordinates other than v vanishing at the projection
/// from the coordinate point e_v of every common zero of G and H other than
/// e_v; nullopt when G and H share a factor (or one is zero).
std::optional<BinaryForm<Rat>> pair_eliminant(const TriPoly<Rat>& G, const TriPoly<Rat>& H, std::size_t v) {
    if (G.is_zero() || H.is_zero())
        return std::nullopt;
    auto [a, b] = others(v);
    const int p = G.degree_in(v).value(), q = H.degree_in(v).value();
    const int dG = G.degree().value(), dH = H.degree().value();
    if (p == 0 && q == 0)
        return gcd_form(as_form(G, a, b), as_form(H, a, b));
    if (p == 0)
        return as_form(G, a, b).pow(q);
    if (q == 0)
        return as_form(H, a, b).pow(p);
    auto R = resultant_in(chart_in(G, a, v), chart_in(H, a, v), 1);
    if (R.is_zero())
        return std::nullopt;
    return homogenize_univariate(drop_variable(R, 1, Rat(0)), dG * q + dH * p - p * q);
}

std::optional<BinaryForm<Rat>> direction_eliminant(const Gradient& grad, std::size_t v) {
    std::vector<BinaryForm<Rat>> parts;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        if (auto e = pair_eliminant(grad[i], grad[j], v))
            parts.push_back(*e);
    if (parts.empty()) {
        TriPoly<Rat> l1 = grad[0] + grad[1] * Rat(2) + grad[2] * Rat(3);
        TriPoly<Rat> l2 = grad[0] * Rat(3) + grad[1] + grad[2] * Rat(2);
        if (auto e = pair_eliminant(l1, l2, v))
            parts.push_back(*e);
    }
    if (parts.empty())
        return std::nullopt;
    BinaryForm<Rat> E = gcd_form(parts[0], parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k)
        E = gcd_form(E, parts[k]);
    return E;
}

struct EliminantRoots {
    /// (a : b) pairs.
    std::vector<std::pair<QuadExt, QuadExt>> roots;
    int cluster_degree = 0;
};

EliminantRoots eliminant_roots(const BinaryForm<Rat>& E, const FactorConfig& config) {
    EliminantRoots out;
    UniPoly<Rat> e = dehomogenize_form(E);
    if (E.degree().value() > e.degree().value())
        out.roots.emplace_back(QuadExt(1), QuadExt(0));
    if (e.is_constant())
        return out;
    auto split = split_low_degree_factors(radical(e), 2, config);
    for (const auto& f : split.factors) {
        std::optional<std::vector<QuadExt>> rs;
        try {
            rs = low_degree_roots(f);
        } catch (const Inconclusive&) {
        }
        if (!rs) {
            out.cluster_degree += f.degree().value();
            continue;
        }
        for (const auto& r : *rs)
            out.roots.emplace_back(r, QuadExt(1));
    }
    if (!split.rest.is_constant())
        out.cluster_degree += split.rest.degree().value();
    return out;
}

struct LinePoints {
    std::vector<ProjPoint> points;
    int cluster_degree = 0;
};

/// Common zeros of the partials on the line joining e_v and the point Q with
/// coordinates (a0, b0) off v and 0 at v, other than e_v itself.
LinePoints points_on_line(const Gradient& grad, std::size_t v, const QuadExt& a0, const QuadExt& b0) {
    auto [a, b] = others(v);
    ProjPoint Q;
    Q[a] = a0;
    Q[b] = b0;
    Q[v] = QuadExt(0);
    // Points w * e_v + s * Q as forms in (w, s).
    using BF = BinaryForm<QuadExt>;
    BF w = BF::variable(0), s = BF::variable(1);
    std::array<BF, 3> args;
    for (std::size_t i = 0; i < 3; ++i)
        args[i] = s * Q[i] + (i == v ? w : BF());
    BF acc;
    for (const auto& g : grad) {
        if (g.is_zero())
            continue;
        BF r = compose(convert<QuadExt>(g), args);
        if (r.is_zero())
            continue;
        acc = acc.is_zero() ? gcd_form(r, r) : gcd_form(acc, r);
    }
    LinePoints out;
    if (acc.is_zero())
        throw InputError("the partial derivatives vanish along a whole line; the curve has a repeated component");
    UniPoly<QuadExt> g = dehomogenize_form(acc);
    if (g.is_constant())
        return out;
    const int deg = g.degree().value();
    std::optional<std::vector<QuadExt>> rs;
    if (deg <= 2) {
        try {
            rs = low_degree_roots(g);
        } catch (const Inconclusive&) {
        } catch (const IncompatibleField&) {
        }
    }
    if (!rs) {
        out.cluster_degree += deg;
        return out;
    }
    for (const auto& r : *rs) {
        try {
            ProjPoint P = Q;
            P[v] = r;
            out.points.push_back(normalize_point(P));
        } catch (const IncompatibleField&) {
            out.cluster_degree += 1;
        }
    }
    return out;
}

struct DirectionScan {
    bool degenerate = false;
    std::vector<ProjPoint> points;
    int cluster_degree = 0;
};

DirectionScan scan_direction(const Gradient& grad, std::size_t v, const FactorConfig& config) {
    DirectionScan scan;
    auto E = direction_eliminant(grad, v);
    if (!E) {
        scan.degenerate = true;
        return scan;
    }
    auto roots = eliminant_roots(*E, config);
    scan.cluster_degree = roots.cluster_degree;
    for (const auto& [a0, b0] : roots.roots) {
        auto line = points_on_line(grad, v, a0, b0);
        scan.cluster_degree += line.cluster_degree;
        scan.points.insert(scan.points.end(), line.points.begin(), line.points.end());
    }
    return scan;
}

template <std::size_t N>
bool divisible_by_variable(const Polynomial<Rat, N>& p, std::size_t var, int power) {
    return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[var] >= power; });
}

UniPoly<Rat> restrict_to_line(const TriPoly<Rat>& F, std::size_t keep, const Rat& fixed) {
    // Z = 1, the other of X/Y fixed.
    BinaryForm<Rat> affine = drop_variable(F, 2, Rat(1));
    return drop_variable(affine, keep == 0 ? 1 : 0, fixed);
}

Rat nth_sample(int k) { return Rat(k % 2 == 1 ? (k + 1) / 2 : -(k / 2)); }

std::vector<Rat> rational_roots(const UniPoly<Rat>& p) {
    std::vector<Rat> out;
    if (p.is_constant())
        return out;
    for (const auto& f : split_low_degree_factors(radical(p), 1).factors)
        out.push_back(-f.constant_term());
    return out;
}

/// A rational linear factor of F found by the restriction screen.
std::optional<TriPoly<Rat>> find_linear_factor(const TriPoly<Rat>& F) {
    using P3 = TriPoly<Rat>;
    if (F.degree().value() <= 1)
        return std::nullopt;
    for (std::size_t i = 0; i < 3; ++i)
        if (divisible_by_variable(F, i, 1))
            return P3::variable(i);
    P3 X = P3::variable(0), Y = P3::variable(1), Z = P3::variable(2);
    std::vector<P3> candidates;
    UniPoly<Rat> on_y0 = restrict_to_line(F, 0, Rat(0));
    UniPoly<Rat> on_y1 = restrict_to_line(F, 0, Rat(1));
    UniPoly<Rat> on_x0 = restrict_to_line(F, 1, Rat(0));
    if (on_y0.is_zero())
        return Y;
    if (on_y1.is_zero())
        return Y - Z;
    if (on_x0.is_zero())
        return X;
    for (const auto& r0 : rational_roots(on_y0))
        for (const auto& r1 : rational_roots(on_y1))
            candidates.push_back(X - Z * r0 - Y * (r1 - r0));
    for (const auto& s : rational_roots(on_x0))
        candidates.push_back(Y - Z * s);
    for (const auto& L : candidates)
        if (divide_exact(F, L))
            return L;
    return std::nullopt;
}

const std::array<Matrix3, 3> kRetryChanges{{
    {{{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(0), Rat(1)}}},
    {{{Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(1)}}},
    {{{Rat(1), Rat(2), Rat(3)}, {Rat(0), Rat(1), Rat(4)}, {Rat(0), Rat(0), Rat(1)}}},
}};

}  // namespace

ProjPoint normalize_point(const ProjPoint& p) {
    point_field(p);
    for (std::size_t i = 0; i < 3; ++i) {
        if (p[i].is_zero())
            continue;
        QuadExt inv = p[i].inverse();
        ProjPoint r;
        for (std::size_t j = 0; j < 3; ++j)
            r[j] = p[j] * inv;
        return r;
    }
    throw InputError("[0:0:0] is not a projective point");
}

std::int64_t point_field(const ProjPoint& p) {
    return join_fields(join_fields(p[0].d(), p[1].d()), p[2].d());
}

ProjPoint conjugate_point(const ProjPoint& p) { return {p[0].conjugate(), p[1].conjugate(), p[2].conjugate()}; }

std::string to_string(ConeKind kind) {
    switch (kind) {
    case ConeKind::Smooth: return "smooth";
    case ConeKind::Node: return "node";
    case ConeKind::Cusp: return "cusp";
    case ConeKind::ConjugateNode: return "conjugate-tangent node";
    case ConeKind::Higher: return "higher";
    }
    return "higher";
}

std::array<std::string, 2> chart_names(std::size_t chart) {
    static const std::array<std::string, 3> lower{"x", "y", "z"};
    auto [i, j] = others(chart);
    return {lower[i], lower[j]};
}

bool is_singular_at(const TriPoly<Rat>& F, const ProjPoint& P) {
    require_curve(F);
    normalize_point(P);
    bool all_zero = true;
    for (const auto& g : gradient(F))
        if (!g.evaluate<QuadExt>(P).is_zero())
            all_zero = false;
    if (all_zero && !F.evaluate<QuadExt>(P).is_zero())
        throw TheoremContradiction("all partials vanish at a point off the curve, contradicting Euler's relation");
    return all_zero;
}

ConeInfo multiplicity_and_cone(const TriPoly<Rat>& F, const ProjPoint& P0) {
    require_curve(F);
    ProjPoint P = normalize_point(P0);
    if (!F.evaluate<QuadExt>(P).is_zero())
        throw InputError("point " + render_point(P) + " is not on the curve");
    ConeInfo info;
    std::size_t c = P[2].is_zero() ? (P[1].is_zero() ? 0 : 1) : 2;
    info.chart = c;
    QuadExt inv = P[c].inverse();
    for (auto& x : P)
        x *= inv;
    auto [i, j] = others(c);
    using BF = BinaryForm<QuadExt>;
    BF f = drop_variable(convert<QuadExt>(F), c, QuadExt(1));
    BF x = BF::variable(0), y = BF::variable(1);
    BF shifted = compose(f, std::array<BF, 2>{x + BF(P[i]), y + BF(P[j])});
    info.multiplicity = shifted.low_degree().value();
    info.cone = shifted.homogeneous_component(info.multiplicity);
    if (info.multiplicity == 1) {
        info.kind = ConeKind::Smooth;
        info.tangents.push_back(info.cone * info.cone.leading_coefficient().inverse());
        return info;
    }
    if (info.multiplicity >= 3) {
        info.kind = ConeKind::Higher;
        return info;
    }
    const QuadExt alpha = info.cone.coefficient({2, 0});
    const QuadExt beta = info.cone.coefficient({1, 1});
    const QuadExt gamma = info.cone.coefficient({0, 2});
    const QuadExt disc = beta * beta - QuadExt(4) * alpha * gamma;
    auto monic = [](const BF& l) { return l * l.leading_coefficient().inverse(); };
    if (disc.is_zero()) {
        info.kind = ConeKind::Cusp;
        info.tangents.push_back(alpha.is_zero() ? y : monic(x * alpha + y * (beta / QuadExt(2))));
        // The cusp is ordinary when the cubic part does not vanish along the tangent.
        std::array<QuadExt, 2> dir = alpha.is_zero() ? std::array<QuadExt, 2>{QuadExt(1), QuadExt(0)}
                                                     : std::array<QuadExt, 2>{-beta / QuadExt(2), alpha};
        info.ordinary = !shifted.homogeneous_component(3).evaluate<QuadExt>(dir).is_zero();
        return info;
    }
    const std::int64_t field = point_field(P);
    std::optional<QuadExt> root;
    try {
        root = disc.sqrt_in_field(field);
    } catch (const IncompatibleField&) {
    }
    if (root) {
        info.kind = ConeKind::Node;
        if (!gamma.is_zero()) {
            // y = r x with gamma r^2 + beta r + alpha = 0
            for (int sign : {1, -1}) {
                QuadExt r = (-beta + QuadExt(sign) * *root) / (QuadExt(2) * gamma);
                info.tangents.push_back(monic(y - x * r));
            }
        } else {
            info.tangents.push_back(x);
            info.tangents.push_back(monic(x * alpha + y * beta));
        }
        std::sort(info.tangents.begin(), info.tangents.end(),
                  [](const BF& l, const BF& m) { return l.coefficient({0, 1}) < m.coefficient({0, 1}); });
        return info;
    }
    info.kind = ConeKind::ConjugateNode;
    if (field == 0 && disc.is_rational()) {
        Rat r = disc.a();
        Rat radicand(BigInt(r.num() * r.den()));
        if (radicand.fits_int64())
            info.tangent_field = squarefree_part(radicand.to_int64());
    }
    return info;
}

bool is_squarefree_curve(const TriPoly<Rat>& F) {
    if (F.is_zero())
        return false;
    if (F.is_constant())
        return true;
    const int d = F.degree().value();
    if (divisible_by_variable(F, 2, 2))
        return false;
    const int attempts = 2 * d * d + 2;
    for (std::size_t keep : {std::size_t{0}, std::size_t{1}}) {
        const Degree full = F.degree_in(keep);
        if (full == Degree(0))
            continue;
        bool passed = false;
        for (int k = 0; k < attempts && !passed; ++k) {
            UniPoly<Rat> r = restrict_to_line(F, keep, nth_sample(k));
            if (r.degree() != full)
                continue;
            passed = gcd_poly(r, r.derivative(0)).is_constant();
        }
        if (!passed)
            return false;
    }
    return true;
}

SingularLocus enumerate_singular_points(const TriPoly<Rat>& F, const SingularConfig& config) {
    require_curve(F);
    const int d = F.degree().value();
    if (d > config.degree_cap)
        throw Inconclusive("curve degree " + std::to_string(d) + " exceeds the degree cap " +
                           std::to_string(config.degree_cap) + "; raise it with --degree-cap");
    if (!is_squarefree_curve(F))
        throw InputError("the curve has a repeated component (F is not squarefree)");
    const Gradient grad = gradient(F);
    std::vector<ProjPoint> found;
    for (std::size_t i = 0; i < 3; ++i)
        if (is_singular_at(F, unit_point(i)))
            found.push_back(unit_point(i));

    SingularLocus locus;
    std::vector<DirectionScan> scans;
    scans.push_back(scan_direction(grad, 2, config.factor));
    if (scans[0].degenerate || scans[0].cluster_degree > 0) {
        scans.push_back(scan_direction(grad, 1, config.factor));
        scans.push_back(scan_direction(grad, 0, config.factor));
    }
    bool complete = false;
    int cluster = 0;
    bool any = false;
    for (const auto& s : scans) {
        if (s.degenerate)
            continue;
        any = true;
        found.insert(found.end(), s.points.begin(), s.points.end());
        if (s.cluster_degree == 0)
            complete = true;
        else if (cluster == 0)
            cluster = s.cluster_degree;
    }
    if (!any)
        throw Inconclusive("elimination is degenerate in every coordinate direction");
    if (!complete)
        locus.clusters.push_back(cluster);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const auto& P : found) {
        if (!is_singular_at(F, P))
            throw std::logic_error("back-substitution produced a nonsingular point");
        SingularPointReport rep;
        rep.point = P;
        rep.field = point_field(P);
        rep.cone = multiplicity_and_cone(F, P);
        if (rep.field != 0)
            rep.conjugate_partner = normalize_point(conjugate_point(P));
        locus.points.push_back(std::move(rep));
    }
    return locus;
}

GenusReport genus(const TriPoly<Rat>& F, const SingularLocus& locus) {
    require_curve(F);
    GenusReport rep;
    rep.degree = F.degree().value();
    rep.bound = (rep.degree - 1) * (rep.degree - 2) / 2;
    if (!locus.clusters.empty())
        throw Inconclusive("unresolved cluster of singular-point candidates of degree " +
                           std::to_string(locus.clusters.front()));
    for (const auto& p : locus.points) {
        if (p.cone.multiplicity >= 3)
            throw NotApplicable("singular point " + render_point(p.point) + " has multiplicity " +
                                std::to_string(p.cone.multiplicity) +
                                "; the double-point genus formula does not apply");
        else if (!p.cone.ordinary)
            throw NotApplicable("singular point " + render_point(p.point) +
                                " is a double point beyond an ordinary cusp (tacnode or higher); "
                                "the double-point genus formula does not apply");
    }
    if (auto L = find_linear_factor(F))
        throw NotApplicable("the curve is reducible over Q: it contains the line " +
                            render_poly(*L, kProjectiveNames) + " = 0");
    rep.double_points = static_cast<int>(locus.points.size());
    if (rep.double_points > rep.bound)
        throw NotApplicable(std::to_string(rep.double_points) + " double points exceed the bound " +
                            std::to_string(rep.bound) + " for an irreducible curve of degree " +
                            std::to_string(rep.degree) + "; the curve is reducible");
    rep.genus = rep.bound - rep.double_points;
    if (rep.degree >= 4)
        rep.diagnostics.push_back("irreducibility assumed: no rational linear factor found, higher-degree "
                                  "factors are not tested");
    return rep;
}

TriPoly<Rat> transform_curve(const TriPoly<Rat>& F, const Matrix3& M) {
    std::array<TriPoly<Rat>, 3> args;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            args[i] += TriPoly<Rat>::variable(j) * M[i][j];
    return compose(F, args);
}

NonsingularityEvidence compute_evidence(const TriPoly<Rat>& F, const std::optional<Matrix3>& change) {
    NonsingularityEvidence ev;
    ev.coordinate_change = change;
    TriPoly<Rat> G = change ? transform_curve(F, *change) : F;
    const Gradient grad = gradient(G);
    for (std::size_t v = 0; v < 3; ++v) {
        ev.eliminants[v] = direction_eliminant(grad, v);
        ProjPoint e = unit_point(v);
        ev.center_singular[v] = std::all_of(grad.begin(), grad.end(),
                                            [&](const TriPoly<Rat>& g) { return g.evaluate<QuadExt>(e).is_zero(); });
    }
    return ev;
}

bool evidence_conclusive(const NonsingularityEvidence& e) {
    int constant = 0;
    bool constant_center_clean = false;
    for (std::size_t v = 0; v < 3; ++v) {
        if (e.eliminants[v] && e.eliminants[v]->is_constant()) {
            ++constant;
            if (!e.center_singular[v])
                constant_center_clean = true;
        }
    }
    return constant >= 2 || (constant == 1 && constant_center_clean);
}

bool recheck_evidence(const TriPoly<Rat>& F, const NonsingularityEvidence& e) {
    NonsingularityEvidence again = compute_evidence(F, e.coordinate_change);
    return again.eliminants == e.eliminants && again.center_singular == e.center_singular &&
           evidence_conclusive(again);
}

NonsingularityResult nonsingularity_certificate(const TriPoly<Rat>& F, const SingularConfig& config) {
    require_curve(F);
    NonsingularityResult res;
    if (!is_squarefree_curve(F)) {
        res.outcome = NonsingularityResult::Outcome::Singular;
        res.detail = "the curve has a repeated component and is singular along it";
        return res;
    }
    auto ev = compute_evidence(F, std::nullopt);
    if (evidence_conclusive(ev)) {
        res.outcome = NonsingularityResult::Outcome::Nonsingular;
        res.evidence = std::move(ev);
        return res;
    }
    SingularLocus locus = enumerate_singular_points(F, config);
    if (!locus.points.empty()) {
        res.outcome = NonsingularityResult::Outcome::Singular;
        auto rational = std::find_if(locus.points.begin(), locus.points.end(),
                                     [](const SingularPointReport& p) { return p.field == 0; });
        res.witness = rational != locus.points.end() ? *rational : locus.points.front();
        res.detail = "singular point " + render_point(res.witness->point);
        return res;
    }
    if (!locus.clusters.empty()) {
        res.cluster_degree = locus.clusters.front();
        res.detail = "unresolved cluster of degree " + std::to_string(res.cluster_degree);
        return res;
    }
    for (const auto& M : kRetryChanges) {
        auto retry = compute_evidence(F, M);
        if (evidence_conclusive(retry)) {
            res.outcome = NonsingularityResult::Outcome::Nonsingular;
            res.evidence = std::move(retry);
            return res;
        }
    }
    res.detail = "eliminants stay nonconstant after coordinate changes";
    return res;
}

}  // namespace curveforge
