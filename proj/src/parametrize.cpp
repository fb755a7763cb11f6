#include "curveforge/parametrize.hpp"

#include <algorithm>
#include <cstdlib>

namespace curveforge {

namespace {

using P3 = TriPoly<Rat>;
using Q3 = TriPoly<QuadExt>;
using B2 = BinaryForm<Rat>;
using QB2 = BinaryForm<QuadExt>;

Rat determinant(const std::array<std::array<Rat, 3>, 3>& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

void require_homogeneous(const P3& F, int degree, const char* what) {
    if (F.is_zero() || !F.is_homogeneous())
        throw InputError(std::string(what) + ": curve polynomial must be a nonzero homogeneous form");
    if (degree > 0 && F.degree().value() != degree)
        throw InputError(std::string(what) + ": expected a curve of degree " + std::to_string(degree) + ", got " +
                         std::to_string(F.degree().value()));
}

/// Integer evaluation of a primitive integer form, in 128-bit arithmetic when
/// the coefficients are small enough, otherwise in exact rationals.
class PointEvaluator {
public:
    explicit PointEvaluator(const P3& F) : F_(primitive_normalized(F)) {
        small_ = true;
        for (const auto& [m, c] : F_.terms()) {
            if (!c.fits_int64() || std::llabs(c.to_int64()) >= (std::int64_t(1) << 40)) {
                small_ = false;
                break;
            }
            terms_.push_back({m, c.to_int64()});
        }
        degree_ = F_.degree().value();
    }

    bool vanishes(std::int64_t x, std::int64_t y, std::int64_t z) const {
        // Coefficients below 2^40, coordinates below 2^30 and degree <= 2
        // keep 128-bit sums exact.
        constexpr std::int64_t kLimit = std::int64_t(1) << 30;
        if (small_ && degree_ <= 2 && std::max({std::abs(x), std::abs(y), std::abs(z)}) < kLimit) {
            __int128 acc = 0;
            const std::int64_t v[3] = {x, y, z};
            for (const auto& [m, c] : terms_) {
                __int128 t = c;
                for (std::size_t i = 0; i < 3; ++i)
                    for (int e = 0; e < m[i]; ++e)
                        t *= v[i];
                acc += t;
            }
            return acc == 0;
        }
        return F_.evaluate<Rat>({Rat(x), Rat(y), Rat(z)}).is_zero();
    }

private:
    P3 F_;
    bool small_ = false;
    int degree_ = 0;
    std::vector<std::pair<Monomial<3>, std::int64_t>> terms_;
};

QB2 form_variable(std::size_t i) { return QB2::variable(i); }

/// Rational roots (t0 : t1) of a binary form, (1 : 0) included, plus the
/// degree of the part whose roots are not in a quadratic field.
std::pair<std::vector<std::array<QuadExt, 2>>, int> form_roots(const B2& G) {
    std::vector<std::array<QuadExt, 2>> roots;
    int unresolved = 0;
    int d = G.degree().value();
    UniPoly<Rat> g = dehomogenize_form(G);
    if (g.is_zero() || g.degree().value() < d)
        roots.push_back({QuadExt(1), QuadExt(0)});
    if (!g.is_zero() && g.degree().value() > 0) {
        auto split = split_low_degree_factors(radical(g), 2);
        for (const auto& f : split.factors) {
            auto r = low_degree_roots(f);
            if (!r) {
                unresolved += f.degree().value();
                continue;
            }
            for (const auto& x : *r)
                roots.push_back({x, QuadExt(1)});
        }
        if (split.rest.degree().value() > 0)
            unresolved += split.rest.degree().value();
    }
    return {roots, unresolved};
}

}  // namespace

bool conic_is_degenerate(const P3& F) {
    std::array<std::array<Rat, 3>, 3> A;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Monomial<3> m{0, 0, 0};
            m[i] += 1;
            m[j] += 1;
            A[i][j] = i == j ? F.coefficient(m) : F.coefficient(m) / Rat(2);
        }
    return determinant(A).is_zero();
}

RationalMap<QuadExt> param_conic(const P3& F, const ProjPoint& point) {
    require_homogeneous(F, 2, "param conic");
    ProjPoint P = normalize_point(point);
    Q3 G = convert<QuadExt>(F);
    if (!G.evaluate<QuadExt>(P).is_zero())
        throw InputError("the point is not on the conic");
    if (conic_is_degenerate(F))
        throw NotApplicable("the conic is a pair of lines; it has no pencil parametrization");

    // Pair (e_i, e_j) with det(P, e_i, e_j) = +-P_k != 0.
    static constexpr std::array<std::array<std::size_t, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    std::size_t i = 0, j = 0;
    for (const auto& [a, b, k] : kPairs)
        if (!P[k].is_zero()) {
            i = a;
            j = b;
            break;
        }
    std::array<QB2, 3> Q;
    Q[i] = form_variable(1);
    Q[j] = form_variable(0);

    QB2 FQ = compose(G, Q);
    QB2 dot;
    for (std::size_t k = 0; k < 3; ++k)
        dot += Q[k] * G.derivative(k).evaluate<QuadExt>(P);
    std::array<QB2, 3> X;
    for (std::size_t k = 0; k < 3; ++k)
        X[k] = FQ * P[k] - dot * Q[k];
    auto map = make_map(X[0], X[1], X[2]);
    if (!verify_param(G, map))
        throw TheoremContradiction("pencil parametrization failed verification");
    return map;
}

std::optional<RationalMap<Rat>> rational_map(const RationalMap<QuadExt>& map) {
    auto f = to_rational(map.f), g = to_rational(map.g), h = to_rational(map.h);
    if (!f || !g || !h)
        return std::nullopt;
    return make_map(*f, *g, *h);
}

RationalMap<Rat> param_split_degree(const B2& f) {
    if (f.is_zero() || f.degree().value() < 2)
        throw NotApplicable("split-degree parametrization needs a curve of degree at least 2");
    int n = f.degree().value();
    B2 top = f.homogeneous_component(n), next = f.homogeneous_component(n - 1);
    if (next.is_zero() || !(f - top - next).is_zero())
        throw NotApplicable("degree gap: the curve must consist of terms of degrees " + std::to_string(n) +
                            " and " + std::to_string(n - 1) + " only");
    UniPoly<Rat> a = drop_variable(next, 0, Rat(1));
    UniPoly<Rat> b = drop_variable(top, 0, Rat(1));
    if (b.is_zero())
        throw NotApplicable("the top-degree part vanishes identically on x = 1");
    UniPoly<Rat> t = UniPoly<Rat>::variable(0);
    AffineView view{-a, b, -(t * a), b};
    auto map = map_from_affine(view);
    if (!verify_param(homogenize(f), map))
        throw TheoremContradiction("split-degree parametrization failed verification");
    return map;
}

std::optional<ProjPoint> find_rational_point(const P3& F, int height_bound) {
    if (F.is_zero())
        throw InputError("zero polynomial");
    PointEvaluator ev(F);
    for (std::int64_t h = 1; h <= height_bound; ++h) {
        for (std::int64_t x = h; x >= 0; --x)
            for (std::int64_t y = h; y >= -h; --y) {
                if (x == 0 && y < 0)
                    continue;
                bool edge = std::max(std::abs(x), std::abs(y)) == h;
                for (std::int64_t z = h; z >= -h; z = (edge || z != h) ? z - 1 : -h) {
                    if (x == 0 && y == 0 && z <= 0)
                        continue;
                    if (std::max({std::abs(x), std::abs(y), std::abs(z)}) != h)
                        continue;
                    if (std::gcd(std::gcd(x, y), z) != 1)
                        continue;
                    if (ev.vanishes(x, y, z))
                        return ProjPoint{QuadExt(x), QuadExt(y), QuadExt(z)};
                }
            }
    }
    return std::nullopt;
}

QuarticParametrization param_quartic_three_nodes(const P3& F, const std::array<ProjPoint, 3>& nodes,
                                                 const QuarticConfig& config) {
    require_homogeneous(F, 4, "param quartic3");
    QuarticParametrization out;
    for (std::size_t k = 0; k < 3; ++k) {
        ProjPoint P = normalize_point(nodes[k]);
        std::string name = "node " + std::to_string(k + 1);
        if (point_field(P) != 0)
            throw NotApplicable(name + " is not rational; only rational nodes are supported");
        if (!convert<QuadExt>(F).evaluate<QuadExt>(P).is_zero())
            throw NotApplicable(name + " is not on the curve");
        if (!is_singular_at(F, P))
            throw NotApplicable(name + " is not a singular point");
        if (multiplicity_and_cone(F, P).multiplicity != 2)
            throw NotApplicable(name + " is not a double point");
        for (std::size_t r = 0; r < 3; ++r)
            out.change[r][k] = P[r].a();
    }
    if (determinant(out.change).is_zero())
        throw NotApplicable("the nodes are collinear");

    out.transformed = transform_curve(F, out.change);
    for (const auto& [m, c] : out.transformed.terms())
        if (m[0] > 2 || m[1] > 2 || m[2] > 2)
            throw NotApplicable("the transformed quartic is not of the three-node shape");

    P3 X = P3::variable(0), Y = P3::variable(1), Z = P3::variable(2);
    P3 image = compose(out.transformed, std::array<P3, 3>{Y * Z, X * Z, X * Y});
    auto conic = divide_exact(image, (X * Y * Z).pow(2));
    if (!conic || conic->is_zero())
        throw TheoremContradiction("Cremona image is not divisible by X^2*Y^2*Z^2");
    out.conic = primitive_normalized(*conic);
    auto point = find_rational_point(out.conic, config.height_bound);
    if (!point)
        throw NoRationalPoint("the conic " + render_poly(out.conic, kProjectiveNames) +
                                  " has no rational point of height <= " + std::to_string(config.height_bound) +
                                  "; supply a point over a quadratic field",
                              out.conic);
    out.conic_point = *point;
    auto cmap = rational_map(param_conic(out.conic, *point));
    if (!cmap)
        throw TheoremContradiction("conic map through a rational point has irrational coefficients");

    std::array<B2, 3> base{cmap->g * cmap->h, cmap->f * cmap->h, cmap->f * cmap->g};
    std::array<B2, 3> back;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t k = 0; k < 3; ++k)
            back[r] += base[k] * out.change[r][k];
    out.map = make_map(back[0], back[1], back[2]);
    if (!verify_param(F, out.map))
        throw TheoremContradiction("three-node parametrization failed verification");
    return out;
}

KapfererWitness kapferer_witness(const P3& F, const RationalMap<Rat>& map) {
    require_homogeneous(F, 0, "kapferer");
    if (!verify_param(F, map))
        throw InputError("the map does not parametrize the curve");
    KapfererWitness w;
    w.curve_degree = F.degree().value();
    w.map_degree = map.degree();
    w.minor_degree = 2 * w.map_degree - 2;
    w.partial_degree = w.map_degree * (w.curve_degree - 1);
    w.degree_law_holds = w.minor_degree >= w.partial_degree;

    auto dU = [](const B2& p) { return p.derivative(0); };
    auto dV = [](const B2& p) { return p.derivative(1); };
    const B2 &f = map.f, &g = map.g, &h = map.h;
    w.minors[0] = dU(g) * dV(h) - dV(g) * dU(h);
    w.minors[1] = -(dU(f) * dV(h) - dV(f) * dU(h));
    w.minors[2] = dU(f) * dV(g) - dV(f) * dU(g);
    if (std::all_of(w.minors.begin(), w.minors.end(), [](const B2& m) { return m.is_zero(); }))
        throw TheoremContradiction("all Jacobian minors vanish for a nonconstant map");

    std::array<B2, 3> args{f, g, h};
    for (std::size_t k = 0; k < 3; ++k)
        w.evaluated[k] = compose(F.derivative(k), args);
    if (std::all_of(w.evaluated.begin(), w.evaluated.end(), [](const B2& e) { return e.is_zero(); }))
        throw TheoremContradiction("all partials vanish along the parametrized curve");
    w.gcd = common_factor(w.evaluated[0], w.evaluated[1], w.evaluated[2]);

    if (w.gcd.degree().value() == 0) {
        w.q = B2(Rat(1));
        std::size_t k0 = 0;
        while (w.evaluated[k0].is_zero())
            ++k0;
        auto p = divide_exact(w.minors[k0], w.evaluated[k0]);
        if (!p)
            throw TheoremContradiction("minors are not proportional to the evaluated partials");
        w.p = *p;
        for (std::size_t k = 0; k < 3; ++k)
            if (w.minors[k] != w.p * w.evaluated[k])
                throw TheoremContradiction("minors are not proportional to the evaluated partials");
        if (!w.degree_law_holds)
            throw TheoremContradiction("complete witness violates 2m - 2 >= m(n - 1)");
        w.complete = true;
        return w;
    }

    auto [roots, unresolved] = form_roots(w.gcd);
    w.unresolved_degree = unresolved;
    for (const auto& r : roots) {
        ProjPoint P;
        for (std::size_t k = 0; k < 3; ++k)
            P[k] = convert<QuadExt>(args[k]).evaluate<QuadExt>(r);
        P = normalize_point(P);
        if (!is_singular_at(F, P))
            throw TheoremContradiction("a root of the partials' gcd maps to a smooth point");
        if (std::find(w.singular_points.begin(), w.singular_points.end(), P) == w.singular_points.end())
            w.singular_points.push_back(P);
    }
    std::sort(w.singular_points.begin(), w.singular_points.end());
    return w;
}

CertificateOutcome nonparam_certificate(const P3& F, const SingularConfig& config) {
    require_homogeneous(F, 0, "certificate");
    CertificateOutcome out;
    out.degree = F.degree().value();
    if (out.degree <= 2) {
        out.status = CertificateOutcome::Status::Inapplicable;
        out.conclusion = "curves of degree <= 2 are outside the scope of the non-parametrization theorem";
        return out;
    }
    auto res = nonsingularity_certificate(F, config);
    switch (res.outcome) {
        case NonsingularityResult::Outcome::Inconclusive:
            throw Inconclusive("smoothness could not be decided: " + res.detail);
        case NonsingularityResult::Outcome::Singular:
            out.status = CertificateOutcome::Status::Singular;
            out.witness = res.witness;
            out.evidence = res.evidence;
            out.conclusion = "the curve is singular, so the smoothness hypothesis fails" +
                             (res.detail.empty() ? std::string() : ": " + res.detail);
            return out;
        case NonsingularityResult::Outcome::Nonsingular:
            break;
    }
    out.status = CertificateOutcome::Status::Certified;
    out.evidence = res.evidence;
    out.conclusion = "smooth curve of degree " + std::to_string(out.degree) +
                     " >= 3: no nonconstant coprime binary forms (f, g, h) with F(f, g, h) = 0 exist over any "
                     "field of characteristic 0";
    return out;
}

Rat loop_area(const RationalMap<Rat>& map, const Rat& t0, const Rat& t1) {
    AffineView v = affine_view(map);
    if (v.x_den.degree().value() != 0 || v.y_den.degree().value() != 0)
        throw NotApplicable("the affine view is not polynomial");
    UniPoly<Rat> x = v.x_num * v.x_den.leading_coefficient().inverse();
    UniPoly<Rat> y = v.y_num * v.y_den.leading_coefficient().inverse();
    UniPoly<Rat> I = poly_integrate(y * x.derivative(0));
    Rat a = evaluate(I, t1) - evaluate(I, t0);
    return a.sign() < 0 ? -a : a;
}

std::array<BigInt, 3> pythagorean_triple(const BigInt& m, const BigInt& n) {
    std::array<BigInt, 3> t{BigInt(m * m - n * n), BigInt(2 * m * n), BigInt(m * m + n * n)};
    if (t[0] * t[0] + t[1] * t[1] != t[2] * t[2])
        throw TheoremContradiction("triple identity failed");
    return t;
}

}  // namespace curveforge
