#include "curveforge/diophantine.hpp"

#include <algorithm>
#include <vector>

#include "curveforge/poly_ops.hpp"

namespace curveforge {

namespace {

using U = UniPoly<Rat>;

int deg(const U& p) { return p.degree().value(); }

std::int64_t mod(std::int64_t x, std::int64_t p) {
    x %= p;
    return x < 0 ? x + p : x;
}

bool is_prime(std::int64_t p) {
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Smallest square root of each residue, or -1 for non-squares.
std::vector<std::int64_t> root_table(std::int64_t p) {
    std::vector<std::int64_t> root(p, -1);
    for (std::int64_t e = p - 1; e >= 0; --e)
        root[e * e % p] = e;
    return root;
}

struct Quartic {
    std::int64_t b1, a, b2, p;

    std::int64_t value(std::int64_t m, std::int64_t n) const {
        std::int64_t m2 = m * m % p, n2 = n * n % p;
        return (b1 * (m2 * m2 % p) % p + a * (m2 * n2 % p) % p + b2 * (n2 * n2 % p) % p) % p;
    }
    std::int64_t dm(std::int64_t m, std::int64_t n) const {
        std::int64_t m3 = m * m % p * m % p, mn2 = m * (n * n % p) % p;
        return (4 * b1 % p * m3 % p + 2 * a % p * mn2 % p) % p;
    }
    std::int64_t dn(std::int64_t m, std::int64_t n) const {
        std::int64_t n3 = n * n % p * n % p, m2n = m * m % p * n % p;
        return (2 * a % p * m2n % p + 4 * b2 % p * n3 % p) % p;
    }
};

/// Fills the smoothness witness; false when every partial vanishes.
bool smooth_witness(const Quartic& q, LocalCert& c) {
    if (c.e != 0) {
        c.witness = "2e";
        c.witness_value = 2 * c.e % q.p;
        return true;
    }
    if (std::int64_t v = q.dm(c.m, c.n); v != 0) {
        c.witness = "dm";
        c.witness_value = v;
        return true;
    }
    if (std::int64_t v = q.dn(c.m, c.n); v != 0) {
        c.witness = "dn";
        c.witness_value = v;
        return true;
    }
    return false;
}

/// The conic route: b1*X^2 + a*X*Y + b2*Y^2 = Z^2 is parametrized by lines
/// through one of its points, and a point with X*Y a square gives
/// m^2 = lambda*X, n^2 = lambda*Y, e = lambda*Z. Requires a nondegenerate conic.
bool conic_route(const Quartic& q, const std::vector<std::int64_t>& root) {
    const std::int64_t p = q.p;
    auto F = [&](const std::array<std::int64_t, 3>& v) {
        return mod(q.b1 * v[0] % p * v[0] % p + q.a * v[0] % p * v[1] % p + q.b2 * v[1] % p * v[1] % p -
                       v[2] * v[2] % p,
                   p);
    };
    std::array<std::int64_t, 3> P{};
    bool have = false;
    for (std::int64_t y = 0; y < p && !have; ++y) {
        std::int64_t r = root[mod(q.b1 + q.a * y + q.b2 * y % p * y, p)];
        if (r >= 0) {
            P = {1, y, r};
            have = true;
        }
    }
    if (!have && root[q.b2] >= 0) {
        P = {0, 1, root[q.b2]};
        have = true;
    }
    if (!have)
        throw TheoremContradiction("a nondegenerate conic over F_p has no point");
    std::array<std::int64_t, 3> grad{mod(2 * q.b1 * P[0] + q.a * P[1], p), mod(q.a * P[0] + 2 * q.b2 * P[1], p),
                                     mod(-2 * P[2], p)};
    std::size_t i = 0, j = 1;
    if (P[2] == 0)
        std::tie(i, j) = P[1] != 0 ? std::pair<std::size_t, std::size_t>{0, 2} : std::pair<std::size_t, std::size_t>{1, 2};
    auto try_param = [&](std::int64_t u, std::int64_t v) {
        std::array<std::int64_t, 3> Q{};
        Q[i] = v;
        Q[j] = u;
        std::int64_t fq = F(Q), dot = 0;
        for (std::size_t k = 0; k < 3; ++k)
            dot = (dot + grad[k] * Q[k]) % p;
        std::array<std::int64_t, 3> X;
        for (std::size_t k = 0; k < 3; ++k)
            X[k] = mod(fq * P[k] - dot * Q[k], p);
        if (X[0] == 0 && X[1] == 0)
            return false;
        if (F(X) != 0)
            throw TheoremContradiction("conic pencil left the conic over F_p");
        std::int64_t lambda = X[0] != 0 ? X[0] : X[1];
        std::int64_t m = root[lambda * X[0] % p], n = root[lambda * X[1] % p];
        if (m < 0 || n < 0)
            return false;
        std::int64_t e = lambda * X[2] % p;
        if (mod(q.value(m, n) - e * e, p) != 0)
            throw TheoremContradiction("conic-route solution fails the quartic congruence");
        return true;
    };
    if (try_param(1, 0))
        return true;
    for (std::int64_t t = 0; t < p; ++t)
        if (try_param(t, 1))
            return true;
    return false;
}

}  // namespace

MasonReport mason_check(const U& A, const U& B, const U& C) {
    if (A.is_zero() || B.is_zero() || C.is_zero())
        throw InputError("A, B and C must be nonzero");
    if (!(A + B + C).is_zero())
        throw InputError("A + B + C is not zero");
    if (deg(gcd_poly(gcd_poly(A, B), C)) > 0)
        throw InputError("A, B and C have a common factor");
    if (deg(A) == 0 && deg(B) == 0 && deg(C) == 0)
        throw InputError("A, B and C are all constant");
    MasonReport r;
    r.deg_a = deg(A);
    r.deg_b = deg(B);
    r.deg_c = deg(C);
    r.rad_degree = deg(radical(A * B * C));
    r.slack = r.rad_degree - 1 - std::max({r.deg_a, r.deg_b, r.deg_c});
    r.holds = r.slack >= 0;
    if (!r.holds)
        throw TheoremContradiction("max degree exceeds deg rad(ABC) - 1 for coprime A + B + C = 0");
    return r;
}

std::string to_string(FermatReport::Verdict v) {
    switch (v) {
        case FermatReport::Verdict::NotASolution: return "not a solution";
        case FermatReport::Verdict::Trivial: return "trivial";
        case FermatReport::Verdict::Constant: return "constant";
        case FermatReport::Verdict::Solution: return "solution";
    }
    return "unknown";
}

FermatReport fermat_poly_check(const U& x, const U& y, const U& z, int n) {
    if (n < 2)
        throw InputError("the exponent must be at least 2");
    FermatReport r;
    r.common = U(Rat(1));
    unsigned e = static_cast<unsigned>(n);
    if (!(x.pow(e) + y.pow(e) - z.pow(e)).is_zero()) {
        r.verdict = FermatReport::Verdict::NotASolution;
        r.detail = "x^n + y^n - z^n is not identically zero";
        return r;
    }
    if (x.is_zero() || y.is_zero() || z.is_zero()) {
        r.verdict = FermatReport::Verdict::Trivial;
        r.detail = "a component is zero";
        return r;
    }
    r.common = make_monic(gcd_poly(gcd_poly(x, y), z));
    U xs = divmod(x, r.common).first, ys = divmod(y, r.common).first, zs = divmod(z, r.common).first;
    if (deg(xs) == 0 && deg(ys) == 0 && deg(zs) == 0) {
        r.verdict = FermatReport::Verdict::Constant;
        r.detail = "constant after removing the common factor";
        return r;
    }
    if (n > 2)
        throw TheoremContradiction("nonconstant coprime polynomial solution of x^n + y^n = z^n with n > 2");
    r.verdict = FermatReport::Verdict::Solution;
    r.detail = "nonconstant coprime solution for n = 2";
    return r;
}

std::string to_string(PellReport::SolutionStatus s) {
    switch (s) {
        case PellReport::SolutionStatus::None: return "none";
        case PellReport::SolutionStatus::Verified: return "verified";
        case PellReport::SolutionStatus::Trivial: return "trivial";
        case PellReport::SolutionStatus::Invalid: return "invalid";
    }
    return "unknown";
}

PellReport pell_bound_check(const U& D, const std::optional<std::pair<U, U>>& solution) {
    if (D.is_zero() || deg(D) == 0)
        throw InputError("D must be nonconstant");
    PellReport r;
    r.degree = deg(D);
    r.distinct_roots = deg(radical(D));
    r.bound = 2 * r.distinct_roots - 2;
    r.possible = r.degree <= r.bound;
    if (solution) {
        const auto& [X, Y] = *solution;
        if (!(X * X - D * Y * Y - U(Rat(1))).is_zero())
            r.solution = PellReport::SolutionStatus::Invalid;
        else if (Y.is_zero())
            r.solution = PellReport::SolutionStatus::Trivial;
        else
            r.solution = PellReport::SolutionStatus::Verified;
        if (r.solution == PellReport::SolutionStatus::Verified && !r.possible)
            throw TheoremContradiction("verified nontrivial solution although deg D > 2n(D) - 2");
    }
    return r;
}

LocalCert local_solvability(std::int64_t b1, std::int64_t a, std::int64_t b2, std::int64_t p,
                            const LocalConfig& config) {
    if (p == 2)
        throw InputError("p = 2 is not supported");
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not an odd prime");
    if (p > config.prime_cap)
        throw InputError("p exceeds the search cap " + std::to_string(config.prime_cap));
    if (b1 == 0 || b2 == 0)
        throw InputError("b1 and b2 must be nonzero");

    Quartic q{mod(b1, p), mod(a, p), mod(b2, p), p};
    LocalCert c;
    c.b1 = b1;
    c.a = a;
    c.b2 = b2;
    c.p = p;
    std::int64_t disc = mod(q.a * q.a - 4 * q.b1 % p * q.b2, p);
    c.condition = (2 * q.a % p * q.b1 % p * q.b2 % p * disc % p) != 0;

    auto root = root_table(p);
    bool any_nontrivial = false, found = false;
    for (std::int64_t n = 0; n < p && !found; ++n)
        for (std::int64_t m = 0; m < p && !found; ++m) {
            if (m == 0 && n == 0)
                continue;
            std::int64_t e = root[q.value(m, n)];
            if (e < 0)
                continue;
            any_nontrivial = true;
            c.m = m;
            c.n = n;
            c.e = e;
            found = smooth_witness(q, c);
        }

    if (config.cross_check && disc != 0) {
        c.cross_check_found = conic_route(q, root);
        if (*c.cross_check_found != any_nontrivial)
            throw TheoremContradiction("brute-force and conic-route searches disagree");
    }
    if (!found) {
        if (c.condition)
            throw TheoremContradiction("no smooth solution mod " + std::to_string(p) +
                                       " although p does not divide 2*a*b1*b2*(a^2 - 4*b1*b2)");
        throw Inconclusive("no smooth solution mod " + std::to_string(p) + (any_nontrivial ? " (only singular ones)" : ""));
    }
    return c;
}

bool recheck_local(const LocalCert& c) {
    if (c.p < 3 || !is_prime(c.p))
        return false;
    Quartic q{mod(c.b1, c.p), mod(c.a, c.p), mod(c.b2, c.p), c.p};
    std::int64_t m = mod(c.m, c.p), n = mod(c.n, c.p), e = mod(c.e, c.p);
    if (m == 0 && n == 0)
        return false;
    if (q.value(m, n) != e * e % c.p)
        return false;
    std::int64_t w = 0;
    if (c.witness == "2e")
        w = 2 * e % c.p;
    else if (c.witness == "dm")
        w = q.dm(m, n);
    else if (c.witness == "dn")
        w = q.dn(m, n);
    else
        return false;
    return w != 0 && w == mod(c.witness_value, c.p);
}

}  // namespace curveforge
