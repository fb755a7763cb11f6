#include "curveforge/poly_ops.hpp"

#include <algorithm>
#include <cstdlib>

namespace curveforge {

namespace {

// Dense ascending coefficient vectors for the univariate algorithms.

template <ExactField K>
std::vector<K> to_dense(const UniPoly<K>& p) {
    if (p.is_zero())
        return {};
    std::vector<K> v(p.degree().value() + 1);
    for (const auto& [m, c] : p.terms())
        v[m[0]] = c;
    return v;
}

template <ExactField K>
UniPoly<K> from_dense(const std::vector<K>& v) {
    UniPoly<K> p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.add_term({static_cast<int>(i)}, v[i]);
    return p;
}

template <class T>
void trim(std::vector<T>& v) {
    while (!v.empty() && v.back() == T(0))
        v.pop_back();
}

template <ExactField K>
std::pair<std::vector<K>, std::vector<K>> dense_divmod(std::vector<K> a, const std::vector<K>& b) {
    if (b.empty())
        throw InputError("polynomial division by zero");
    if (a.size() < b.size())
        return {{}, std::move(a)};
    std::vector<K> q(a.size() - b.size() + 1);
    const K inv = K(1) / b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i].is_zero())
            continue;
        K t = a[i] * inv;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = t;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= t * b[j];
    }
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
}

template <ExactField K>
std::vector<K> dense_monic(std::vector<K> v) {
    trim(v);
    if (v.empty())
        return v;
    K inv = K(1) / v.back();
    for (auto& c : v)
        c *= inv;
    return v;
}

// Integer polynomials for the fraction-free gcd and for Kronecker.

using IntPoly = std::vector<BigInt>;

void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty())
        return;
    BigInt g = 0;
    for (const auto& c : p)
        g = gcd(g, c);
    if (p.back() < 0)
        g = -g;
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_int_primitive(const UniPoly<Rat>& p) {
    if (p.is_zero())
        return {};
    BigInt l = 1;
    for (const auto& [m, c] : p.terms())
        l = lcm(l, c.den());
    IntPoly v(p.degree().value() + 1, BigInt(0));
    for (const auto& [m, c] : p.terms())
        v[m[0]] = c.num() * (l / c.den());
    make_primitive(v);
    return v;
}

UniPoly<Rat> int_to_monic(const IntPoly& v) {
    UniPoly<Rat> p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.add_term({static_cast<int>(i)}, Rat(v[i], v.back()));
    return p;
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
        BigInt la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= la * b[j];
        trim(a);
    }
    return a;
}

BigInt int_eval(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

std::optional<IntPoly> int_divide_exact(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size())
        return std::nullopt;
    IntPoly q(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0)
            continue;
        if (!mpz_divisible_p(a[i].get_mpz_t(), b.back().get_mpz_t()))
            return std::nullopt;
        BigInt t = a[i] / b.back();
        std::size_t shift = i - (b.size() - 1);
        q[shift] = t;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= t * b[j];
    }
    trim(a);
    if (!a.empty())
        return std::nullopt;
    return q;
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Some factor of `p` of degree exactly `d` (or a linear factor met on the
/// way), found by interpolating divisor choices at d + 1 integer points.
std::optional<IntPoly> find_factor(const IntPoly& p, int d, std::uint64_t budget) {
    struct Sample {
        BigInt x;
        BigInt value;
        std::vector<BigInt> divisors;
    };
    const std::size_t need = static_cast<std::size_t>(d) + 1;
    std::vector<Sample> pool;
    // 0, 1, -1, 2, -2, ...
    for (long k = 0; pool.size() < 2 * need + 2; ++k) {
        long x = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
        BigInt v = int_eval(p, BigInt(x));
        if (v == 0)
            return IntPoly{BigInt(-x), BigInt(1)};
        pool.push_back({BigInt(x), v, {}});
    }
    for (auto& s : pool)
        s.divisors = positive_divisors(abs(s.value));
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
    pool.resize(need);

    long double combos = 1;
    for (std::size_t j = 0; j < need; ++j)
        combos *= static_cast<long double>(pool[j].divisors.size()) * (j == 0 ? 1 : 2);
    if (combos > static_cast<long double>(budget))
        throw Inconclusive("Kronecker search for a degree-" + std::to_string(d) +
                           " factor needs more divisor combinations than the budget allows");

    // Lagrange basis with a common integer denominator W.
    std::vector<IntPoly> basis(need);
    std::vector<BigInt> weight(need);
    BigInt W = 1;
    for (std::size_t j = 0; j < need; ++j) {
        IntPoly nj{BigInt(1)};
        BigInt wj = 1;
        for (std::size_t k = 0; k < need; ++k) {
            if (k == j)
                continue;
            nj = int_mul(nj, IntPoly{-pool[k].x, BigInt(1)});
            wj *= pool[j].x - pool[k].x;
        }
        basis[j] = std::move(nj);
        weight[j] = wj;
        W = lcm(W, abs(wj));
    }
    for (std::size_t j = 0; j < need; ++j)
        weight[j] = W / weight[j];

    // State of sample j encodes a divisor index and, except for the first
    // sample (g and -g are the same factor), a sign.
    std::vector<std::size_t> state(need, 0);
    auto states_of = [&](std::size_t j) { return pool[j].divisors.size() * (j == 0 ? 1 : 2); };
    for (;;) {
        IntPoly G(need, BigInt(0));
        for (std::size_t j = 0; j < need; ++j) {
            std::size_t s = state[j];
            std::size_t idx = j == 0 ? s : s / 2;
            BigInt coef = pool[j].divisors[idx] * weight[j];
            if (j > 0 && s % 2)
                coef = -coef;
            for (std::size_t i = 0; i < basis[j].size(); ++i)
                G[i] += coef * basis[j][i];
        }
        bool integral = true;
        for (auto& c : G) {
            if (!mpz_divisible_p(c.get_mpz_t(), W.get_mpz_t())) {
                integral = false;
                break;
            }
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), W.get_mpz_t());
        }
        if (integral) {
            trim(G);
            if (static_cast<int>(G.size()) == d + 1) {
                make_primitive(G);
                if (G.front() != 0 && mpz_divisible_p(p.back().get_mpz_t(), G.back().get_mpz_t()) &&
                    mpz_divisible_p(p.front().get_mpz_t(), G.front().get_mpz_t()) && int_divide_exact(p, G))
                    return G;
            }
        }
        std::size_t j = 0;
        for (; j < need; ++j) {
            if (++state[j] < states_of(j))
                break;
            state[j] = 0;
        }
        if (j == need)
            return std::nullopt;
    }
}

struct SquarefreeSplit {
    std::vector<IntPoly> factors;
    IntPoly rest;
};

/// Splits a primitive squarefree integer polynomial into irreducible factors
/// of degree <= max_degree and a cofactor with no such factor.
SquarefreeSplit split_squarefree(IntPoly work, int max_degree, std::uint64_t budget) {
    SquarefreeSplit out;
    int d = 1;
    for (;;) {
        int deg = static_cast<int>(work.size()) - 1;
        if (deg <= 0)
            break;
        if (2 * d > deg) {
            // No factor of degree <= deg/2: irreducible.
            if (deg <= max_degree) {
                out.factors.push_back(std::move(work));
                work = IntPoly{BigInt(1)};
            }
            break;
        }
        if (d > max_degree)
            break;
        if (auto g = find_factor(work, d, budget)) {
            work = *int_divide_exact(work, *g);
            make_primitive(work);
            out.factors.push_back(std::move(*g));
        } else {
            ++d;
        }
    }
    out.rest = std::move(work);
    return out;
}

bool poly_less(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first)
            return GradedLexGreater<1>{}(ia->first, ib->first);
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

// Brent's variant of Pollard rho; n odd composite.
BigInt pollard_rho(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const BigInt& v) {
            BigInt t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(const BigInt& n, std::vector<BigInt>& primes) {
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        primes.push_back(n);
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

template <ExactField K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    auto [q, r] = dense_divmod(to_dense(a), to_dense(b));
    return {from_dense(q), from_dense(r)};
}

template <ExactField K>
UniPoly<K> make_monic(const UniPoly<K>& a) {
    return from_dense(dense_monic(to_dense(a)));
}

template <ExactField K>
UniPoly<K> gcd_poly(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw InputError("gcd of two zero polynomials");
    if constexpr (std::is_same_v<K, Rat>) {
        IntPoly x = to_int_primitive(a), y = to_int_primitive(b);
        if (x.size() < y.size())
            std::swap(x, y);
        while (!y.empty()) {
            IntPoly r = pseudo_remainder(x, y);
            make_primitive(r);
            x = std::move(y);
            y = std::move(r);
        }
        return int_to_monic(x);
    } else {
        std::vector<K> x = to_dense(a), y = to_dense(b);
        while (!y.empty()) {
            auto r = dense_divmod(x, y).second;
            x = std::move(y);
            y = dense_monic(std::move(r));
        }
        return from_dense(dense_monic(std::move(x)));
    }
}

template <ExactField K>
UniPoly<K> radical(const UniPoly<K>& a) {
    if (a.is_zero())
        throw InputError("radical of the zero polynomial");
    if (a.is_constant())
        return UniPoly<K>(K(1));
    UniPoly<K> g = gcd_poly(a, a.derivative(0));
    return make_monic(divmod(a, g).first);
}

template <ExactField K>
std::vector<UniPoly<K>> squarefree_decomposition(const UniPoly<K>& a) {
    if (a.is_zero())
        throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<UniPoly<K>> out;
    if (a.is_constant())
        return out;
    UniPoly<K> f = make_monic(a);
    UniPoly<K> df = f.derivative(0);
    UniPoly<K> b = gcd_poly(f, df);
    UniPoly<K> c = divmod(f, b).first;
    UniPoly<K> d = divmod(df, b).first - c.derivative(0);
    while (!c.is_constant()) {
        UniPoly<K> y = gcd_poly(c, d);
        out.push_back(y);
        c = divmod(c, y).first;
        d = divmod(d, y).first - c.derivative(0);
    }
    return out;
}

UniPoly<Rat> poly_integrate(const UniPoly<Rat>& p) {
    UniPoly<Rat> r;
    for (const auto& [m, c] : p.terms())
        r.add_term({m[0] + 1}, c / Rat(m[0] + 1));
    return r;
}

template <ExactField K>
std::optional<std::vector<QuadExt>> low_degree_roots(const UniPoly<K>& p) {
    if (p.is_zero() || !p.degree().is_finite())
        return std::nullopt;
    const int deg = p.degree().value();
    auto coef = [&](int e) { return QuadExt(p.coefficient({e})); };
    std::vector<QuadExt> roots;
    if (deg == 1) {
        roots.push_back(-coef(0) / coef(1));
        return roots;
    }
    if (deg != 2)
        return std::nullopt;
    QuadExt a = coef(2), b = coef(1), c = coef(0);
    QuadExt disc = b * b - QuadExt(4) * a * c;
    std::int64_t field = join_fields(join_fields(a.d(), b.d()), c.d());
    std::optional<QuadExt> s;
    if (field == 0 && disc.is_rational()) {
        try {
            s = QuadExt::sqrt_of(disc.a());
        } catch (const Inconclusive&) {
            return std::nullopt;
        }
    } else {
        s = disc.sqrt_in_field(join_fields(field, disc.d()));
    }
    if (!s)
        return std::nullopt;
    QuadExt two_a = QuadExt(2) * a;
    roots.push_back((-b + *s) / two_a);
    roots.push_back((-b - *s) / two_a);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

template <ExactField K, std::size_t N>
std::optional<Polynomial<K, N>> divide_exact(const Polynomial<K, N>& a, const Polynomial<K, N>& b) {
    if (b.is_zero())
        throw InputError("polynomial division by zero");
    Polynomial<K, N> q, r = a;
    const auto& lb = b.leading_monomial();
    const K inv = K(1) / b.leading_coefficient();
    while (!r.is_zero()) {
        Monomial<N> m = r.leading_monomial();
        for (std::size_t i = 0; i < N; ++i) {
            m[i] -= lb[i];
            if (m[i] < 0)
                return std::nullopt;
        }
        auto t = Polynomial<K, N>::monomial(m, r.leading_coefficient() * inv);
        q += t;
        r -= t * b;
    }
    return q;
}

template <std::size_t N>
Rat content(const Polynomial<Rat, N>& p) {
    if (p.is_zero())
        return Rat(1);
    BigInt g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        g = gcd(g, c.num());
        l = lcm(l, c.den());
    }
    return Rat(abs(g), l);
}

template <std::size_t N>
Polynomial<Rat, N> primitive_normalized(const Polynomial<Rat, N>& p) {
    if (p.is_zero())
        return p;
    Rat c = content(p);
    if (p.leading_coefficient().sign() < 0)
        c = -c;
    return p * c.inverse();
}

template <std::size_t N>
std::optional<Polynomial<Rat, N>> exact_root(const Polynomial<Rat, N>& p, int k) {
    if (k < 1)
        throw InputError("root index must be positive");
    if (p.is_zero() || k == 1)
        return p;
    Polynomial<Rat, N> target = p;
    Rat lc = p.leading_coefficient();
    bool negate_root = false;
    if (lc.sign() < 0) {
        if (k % 2 == 0)
            target = -p;
        else
            negate_root = true;
        lc = -lc;
    }
    auto mono = p.leading_monomial();
    for (auto& e : mono) {
        if (e % k)
            return std::nullopt;
        e /= k;
    }
    BigInt rn, rd;
    if (!mpz_root(rn.get_mpz_t(), lc.num().get_mpz_t(), k) || !mpz_root(rd.get_mpz_t(), lc.den().get_mpz_t(), k))
        return std::nullopt;
    Rat root_lc(rn, rd);
    if (negate_root)
        root_lc = -root_lc;
    auto root = Polynomial<Rat, N>::monomial(mono, root_lc);
    // lt(target - root^k) = k * lt(root)^(k-1) * (next term of the root).
    const auto lead_power = Polynomial<Rat, N>::monomial(mono, root_lc).pow(k - 1) * Rat(k);
    const Monomial<N>& lp_mono = lead_power.leading_monomial();
    const Rat& lp_coef = lead_power.leading_coefficient();
    Monomial<N> last = mono;
    for (;;) {
        Polynomial<Rat, N> residual = target - root.pow(k);
        if (residual.is_zero())
            return root;
        Monomial<N> m = residual.leading_monomial();
        for (std::size_t i = 0; i < N; ++i) {
            m[i] -= lp_mono[i];
            if (m[i] < 0)
                return std::nullopt;
        }
        if (!GradedLexGreater<N>{}(last, m))
            return std::nullopt;
        root += Polynomial<Rat, N>::monomial(m, residual.leading_coefficient() / lp_coef);
        last = m;
    }
}

template <ExactField K>
UniPoly<K> dehomogenize_form(const BinaryForm<K>& f) {
    return drop_variable(f, 1, K(1));
}

template <ExactField K>
BinaryForm<K> homogenize_univariate(const UniPoly<K>& p, int degree) {
    return homogenize_to(p, 1, degree);
}

template <ExactField K>
BinaryForm<K> gcd_form(const BinaryForm<K>& a, const BinaryForm<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw InputError("gcd of two zero forms");
    auto monic_form = [](const BinaryForm<K>& f) { return f * (K(1) / f.leading_coefficient()); };
    if (a.is_zero())
        return monic_form(b);
    if (b.is_zero())
        return monic_form(a);
    UniPoly<K> da = dehomogenize_form(a), db = dehomogenize_form(b);
    int va = a.degree().value() - da.degree().value();
    int vb = b.degree().value() - db.degree().value();
    UniPoly<K> g = gcd_poly(da, db);
    BinaryForm<K> out = homogenize_univariate(g, g.degree().value());
    return out * BinaryForm<K>::monomial({0, std::min(va, vb)}, K(1));
}

std::vector<std::pair<BigInt, int>> factor_integer(const BigInt& n0) {
    if (n0 == 0)
        throw InputError("factorization of zero");
    BigInt n = abs(n0);
    std::vector<BigInt> primes;
    for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, int>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

Factorization kronecker_factor(const UniPoly<Rat>& a, const FactorConfig& config) {
    if (a.is_zero())
        throw InputError("factorization of the zero polynomial");
    const int deg = a.degree().value();
    if (deg > config.degree_cap)
        throw Inconclusive("degree " + std::to_string(deg) + " exceeds the factorization cap " +
                           std::to_string(config.degree_cap) + "; raise the cap to proceed");
    Factorization out;
    out.content = a.leading_coefficient();
    auto parts = squarefree_decomposition(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_constant())
            continue;
        auto split = split_squarefree(to_int_primitive(parts[i]), parts[i].degree().value(), config.divisor_budget);
        for (const auto& f : split.factors)
            out.factors.emplace_back(int_to_monic(f), static_cast<int>(i + 1));
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    return out;
}

LowDegreeSplit split_low_degree_factors(const UniPoly<Rat>& squarefree, int max_degree, const FactorConfig& config) {
    if (squarefree.is_zero())
        throw InputError("factorization of the zero polynomial");
    LowDegreeSplit out;
    if (squarefree.is_constant()) {
        out.rest = UniPoly<Rat>(Rat(1));
        return out;
    }
    auto split = split_squarefree(to_int_primitive(squarefree), max_degree, config.divisor_budget);
    for (const auto& f : split.factors)
        out.factors.push_back(int_to_monic(f));
    std::sort(out.factors.begin(), out.factors.end(), poly_less);
    out.rest = int_to_monic(split.rest);
    return out;
}

#define CF_INSTANTIATE_UNI(K)                                                                 \
    template std::pair<UniPoly<K>, UniPoly<K>> divmod<K>(const UniPoly<K>&, const UniPoly<K>&); \
    template UniPoly<K> make_monic<K>(const UniPoly<K>&);                                     \
    template UniPoly<K> gcd_poly<K>(const UniPoly<K>&, const UniPoly<K>&);                    \
    template UniPoly<K> radical<K>(const UniPoly<K>&);                                        \
    template std::vector<UniPoly<K>> squarefree_decomposition<K>(const UniPoly<K>&);          \
    template std::optional<std::vector<QuadExt>> low_degree_roots<K>(const UniPoly<K>&);      \
    template UniPoly<K> dehomogenize_form<K>(const BinaryForm<K>&);                           \
    template BinaryForm<K> homogenize_univariate<K>(const UniPoly<K>&, int);                  \
    template BinaryForm<K> gcd_form<K>(const BinaryForm<K>&, const BinaryForm<K>&);

CF_INSTANTIATE_UNI(Rat)
CF_INSTANTIATE_UNI(QuadExt)

#define CF_INSTANTIATE_DIV(K, N) \
    template std::optional<Polynomial<K, N>> divide_exact<K, N>(const Polynomial<K, N>&, const Polynomial<K, N>&);

CF_INSTANTIATE_DIV(Rat, 1)
CF_INSTANTIATE_DIV(Rat, 2)
CF_INSTANTIATE_DIV(Rat, 3)
CF_INSTANTIATE_DIV(QuadExt, 1)
CF_INSTANTIATE_DIV(QuadExt, 2)
CF_INSTANTIATE_DIV(QuadExt, 3)

#define CF_INSTANTIATE_RAT(N)                                                     \
    template Rat content<N>(const Polynomial<Rat, N>&);                           \
    template Polynomial<Rat, N> primitive_normalized<N>(const Polynomial<Rat, N>&); \
    template std::optional<Polynomial<Rat, N>> exact_root<N>(const Polynomial<Rat, N>&, int);

CF_INSTANTIATE_RAT(1)
CF_INSTANTIATE_RAT(2)
CF_INSTANTIATE_RAT(3)

}  // namespace curveforge
