#include "curveforge/resultant.hpp"

#include "curveforge/poly_ops.hpp"

namespace curveforge {

namespace {

/// Coefficients of p in `var`, index = exponent, with var removed.
template <ExactField K, std::size_t N>
std::vector<Polynomial<K, N>> coefficients_in(const Polynomial<K, N>& p, std::size_t var) {
    std::vector<Polynomial<K, N>> out(p.degree_in(var).value() + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial<N> stripped = m;
        stripped[var] = 0;
        out[m[var]].add_term(stripped, c);
    }
    return out;
}

}  // namespace

template <ExactField K, std::size_t N>
std::vector<std::vector<Polynomial<K, N>>> sylvester_matrix(const Polynomial<K, N>& A, const Polynomial<K, N>& B,
                                                            std::size_t var) {
    if (A.is_zero() || B.is_zero())
        throw InputError("resultant of a zero polynomial");
    int da = A.degree_in(var).value(), db = B.degree_in(var).value();
    if (da == 0 || db == 0)
        throw InputError("resultant needs positive degree in the eliminated variable");
    auto ca = coefficients_in(A, var), cb = coefficients_in(B, var);
    const int n = da + db;
    std::vector<std::vector<Polynomial<K, N>>> M(n, std::vector<Polynomial<K, N>>(n));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            M[r][r + k] = ca[da - k];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            M[db + r][r + k] = cb[db - k];
    return M;
}

template <ExactField K, std::size_t N>
Polynomial<K, N> bareiss_determinant(std::vector<std::vector<Polynomial<K, N>>> M) {
    const std::size_t n = M.size();
    if (n == 0)
        return Polynomial<K, N>(K(1));
    bool negate = false;
    Polynomial<K, N> prev(K(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < n && M[i][k].is_zero())
                ++i;
            if (i == n)
                return {};
            std::swap(M[i], M[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial<K, N> num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("Bareiss step lost exactness");
                M[i][j] = std::move(*q);
            }
            M[i][k] = Polynomial<K, N>();
        }
        prev = M[k][k];
    }
    return negate ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

template <ExactField K, std::size_t N>
Polynomial<K, N> resultant_in(const Polynomial<K, N>& A, const Polynomial<K, N>& B, std::size_t var) {
    return bareiss_determinant(sylvester_matrix(A, B, var));
}

BinaryForm<Rat> implicitize(const AffineView& view) {
    if (view.x_num.degree() < Degree(1) && view.x_den.degree() < Degree(1) && view.y_num.degree() < Degree(1) &&
        view.y_den.degree() < Degree(1))
        throw InputError("constant map");
    RationalMap<Rat> map = map_from_affine(view);
    UniPoly<Rat> h = dehomogenize_form(map.h);
    UniPoly<Rat> f1 = dehomogenize_form(map.f);
    UniPoly<Rat> f2 = dehomogenize_form(map.g);

    // Variables (x, y, t).
    auto lift = [](const UniPoly<Rat>& p) {
        return insert_variable(insert_variable(p, 0, [](const Monomial<1>&) { return 0; }), 0,
                               [](const Monomial<2>&) { return 0; });
    };
    using P3 = Polynomial<Rat, 3>;
    P3 A = lift(h) * P3::variable(0) - lift(f1);
    P3 B = lift(h) * P3::variable(1) - lift(f2);
    P3 R;
    if (A.degree_in(2) == Degree(0))
        R = A;
    else if (B.degree_in(2) == Degree(0))
        R = B;
    else
        R = resultant_in(A, B, 2);
    if (R.is_zero())
        throw InputError("the resultant vanishes identically; the map components share a factor");
    BinaryForm<Rat> curve = primitive_normalized(drop_variable(R, 2, Rat(0)));
    const int d = curve.degree().value();
    for (int k = d; k >= 2; --k) {
        if (d % k)
            continue;
        if (auto root = exact_root(curve, k)) {
            curve = primitive_normalized(*root);
            break;
        }
    }
    // The image must lie on the curve: h^d * curve(f1/h, f2/h) = 0.
    const int e = curve.degree().value();
    UniPoly<Rat> check;
    for (const auto& [m, c] : curve.terms())
        check += UniPoly<Rat>(c) * f1.pow(m[0]) * f2.pow(m[1]) * h.pow(e - m[0] - m[1]);
    if (!check.is_zero())
        throw TheoremContradiction("implicit equation does not vanish on the parametrized points");
    return curve;
}

#define CF_INSTANTIATE_RES(K, N)                                                                               \
    template std::vector<std::vector<Polynomial<K, N>>> sylvester_matrix<K, N>(                                \
        const Polynomial<K, N>&, const Polynomial<K, N>&, std::size_t);                                        \
    template Polynomial<K, N> bareiss_determinant<K, N>(std::vector<std::vector<Polynomial<K, N>>>);           \
    template Polynomial<K, N> resultant_in<K, N>(const Polynomial<K, N>&, const Polynomial<K, N>&, std::size_t);

CF_INSTANTIATE_RES(Rat, 1)
CF_INSTANTIATE_RES(Rat, 2)
CF_INSTANTIATE_RES(Rat, 3)
CF_INSTANTIATE_RES(QuadExt, 1)
CF_INSTANTIATE_RES(QuadExt, 2)
CF_INSTANTIATE_RES(QuadExt, 3)

}  // namespace curveforge
