#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curveforge/error.hpp"
#include "curveforge/quad_ext.hpp"
#include "curveforge/rational.hpp"

namespace curveforge {

template <class K>
concept ExactField = std::same_as<K, Rat> || std::same_as<K, QuadExt>;

/// Degree of a polynomial; the zero polynomial has degree minus infinity,
/// which compares below every integer and absorbs addition.
class Degree {
public:
    constexpr Degree(int d) : value_(d), finite_(true) {}  // NOLINT(google-explicit-constructor)
    static constexpr Degree minus_infinity() { return Degree(); }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr int value() const {
        if (!finite_)
            throw std::logic_error("degree of the zero polynomial has no integer value");
        return value_;
    }

    friend constexpr bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_)
            return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_)
            return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

private:
    constexpr Degree() = default;
    int value_ = 0;
    bool finite_ = false;
};

template <std::size_t N>
using Monomial = std::array<int, N>;

template <std::size_t N>
constexpr int total_degree(const Monomial<N>& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/// Graded lexicographic order, largest first: total degree, then the
/// exponent of the first variable, then the second, ...
template <std::size_t N>
struct GradedLexGreater {
    bool operator()(const Monomial<N>& a, const Monomial<N>& b) const {
        int da = total_degree<N>(a), db = total_degree<N>(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

/// Sparse polynomial in N variables over an exact field, with no stored zero
/// coefficients. Terms iterate leading term first.
template <class K, std::size_t N>
class Polynomial {
public:
    using Coeff = K;
    using Mono = Monomial<N>;
    using Terms = std::map<Mono, K, GradedLexGreater<N>>;
    static constexpr std::size_t arity = N;

    Polynomial() = default;
    Polynomial(const K& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero())
            terms_.emplace(Mono{}, c);
    }
    template <std::integral I>
    Polynomial(I c) : Polynomial(K(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial variable(std::size_t i) {
        Mono m{};
        m.at(i) = 1;
        return monomial(m, K(1));
    }
    static Polynomial monomial(const Mono& m, const K& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && total_degree<N>(terms_.begin()->first) == 0);
    }

    K coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K() : it->second;
    }
    K constant_term() const { return coefficient(Mono{}); }

    const Mono& leading_monomial() const {
        require_nonzero();
        return terms_.begin()->first;
    }
    const K& leading_coefficient() const {
        require_nonzero();
        return terms_.begin()->second;
    }

    Degree degree() const {
        if (terms_.empty())
            return Degree::minus_infinity();
        return total_degree<N>(terms_.begin()->first);
    }
    Degree degree_in(std::size_t var) const {
        if (terms_.empty())
            return Degree::minus_infinity();
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.at(var));
        return d;
    }
    /// Least total degree among the terms (the multiplicity at the origin).
    Degree low_degree() const {
        if (terms_.empty())
            return Degree::minus_infinity();
        int d = total_degree<N>(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            d = std::min(d, total_degree<N>(m));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty())
            return true;
        int d = total_degree<N>(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return total_degree<N>(t.first) == d; });
    }
    /// Sum of the terms of total degree exactly d.
    Polynomial homogeneous_component(int d) const {
        Polynomial p;
        for (const auto& [m, c] : terms_)
            if (total_degree<N>(m) == d)
                p.terms_.emplace_hint(p.terms_.end(), m, c);
        return p;
    }

    /// Adds c * x^m in place.
    void add_term(const Mono& m, const K& c) {
        if (c.is_zero())
            return;
        for (int e : m)
            if (e < 0)
                throw std::logic_error("negative exponent");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const K& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m;
                for (std::size_t i = 0; i < N; ++i)
                    m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
    friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned e) const {
        Polynomial result(K(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1u)
                result *= base;
            e >>= 1;
            if (e)
                base *= base;
        }
        return result;
    }

    /// Formal partial derivative in variable `var`.
    Polynomial derivative(std::size_t var) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            if (m.at(var) == 0)
                continue;
            Mono d = m;
            d[var] -= 1;
            r.add_term(d, c * K(m[var]));
        }
        return r;
    }

    /// Evaluates at a point whose coordinates live in a ring L that K embeds in.
    template <class L = K>
    L evaluate(const std::array<L, N>& point) const {
        std::array<std::vector<L>, N> powers;
        for (std::size_t i = 0; i < N; ++i) {
            int top = degree_in(i).is_finite() ? degree_in(i).value() : 0;
            powers[i].reserve(top + 1);
            powers[i].push_back(L(1));
            for (int e = 1; e <= top; ++e)
                powers[i].push_back(powers[i].back() * point[i]);
        }
        L acc{};
        for (const auto& [m, c] : terms_) {
            L t = L(c);
            for (std::size_t i = 0; i < N; ++i)
                if (m[i])
                    t *= powers[i][m[i]];
            acc += t;
        }
        return acc;
    }

    template <class Fn>
    Polynomial transform_coefficients(Fn&& fn) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            r.add_term(m, fn(c));
        return r;
    }

private:
    void require_nonzero() const {
        if (terms_.empty())
            throw std::logic_error("leading term of the zero polynomial");
    }

    Terms terms_;
};

template <class K>
using UniPoly = Polynomial<K, 1>;
template <class K>
using BinaryForm = Polynomial<K, 2>;
template <class K>
using TriPoly = Polynomial<K, 3>;

/// Coefficient-wise embedding, e.g. Q[X] into Q(sqrt d)[X].
template <class L, class K, std::size_t N>
Polynomial<L, N> convert(const Polynomial<K, N>& p) {
    Polynomial<L, N> r;
    for (const auto& [m, c] : p.terms())
        r.add_term(m, L(c));
    return r;
}

/// Rational coefficients of a Q(sqrt d) polynomial; nullopt if any is irrational.
template <std::size_t N>
std::optional<Polynomial<Rat, N>> to_rational(const Polynomial<QuadExt, N>& p) {
    Polynomial<Rat, N> r;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational())
            return std::nullopt;
        r.add_term(m, c.a());
    }
    return r;
}

/// The quadratic field the coefficients live in (0 for Q).
template <std::size_t N>
std::int64_t field_of(const Polynomial<QuadExt, N>& p) {
    std::int64_t d = 0;
    for (const auto& [m, c] : p.terms())
        d = join_fields(d, c.d());
    return d;
}

/// Substitutes x_var = value and removes that variable.
template <class K, std::size_t N>
Polynomial<K, N - 1> drop_variable(const Polynomial<K, N>& p, std::size_t var, const K& value) {
    static_assert(N >= 1);
    Polynomial<K, N - 1> r;
    int top = p.degree_in(var).is_finite() ? p.degree_in(var).value() : 0;
    std::vector<K> powers{K(1)};
    for (int e = 1; e <= top; ++e)
        powers.push_back(powers.back() * value);
    for (const auto& [m, c] : p.terms()) {
        Monomial<N - 1> reduced{};
        for (std::size_t i = 0, j = 0; i < N; ++i)
            if (i != var)
                reduced[j++] = m[i];
        r.add_term(reduced, c * powers[m[var]]);
    }
    return r;
}

/// Adds a new variable at position `var`, with exponent `exponent_of(term)`.
template <class K, std::size_t N, class Fn>
Polynomial<K, N + 1> insert_variable(const Polynomial<K, N>& p, std::size_t var, Fn&& exponent_of) {
    Polynomial<K, N + 1> r;
    for (const auto& [m, c] : p.terms()) {
        Monomial<N + 1> lifted{};
        for (std::size_t i = 0, j = 0; i < N + 1; ++i)
            lifted[i] = (i == var) ? exponent_of(m) : m[j++];
        r.add_term(lifted, c);
    }
    return r;
}

/// Homogenizes to the given degree (defaults to the total degree) by inserting
/// a new variable at position `var`.
template <class K, std::size_t N>
Polynomial<K, N + 1> homogenize_to(const Polynomial<K, N>& p, std::size_t var, int degree) {
    if (p.degree().is_finite() && p.degree().value() > degree)
        throw InputError("homogenization degree below the polynomial's degree");
    return insert_variable(p, var, [degree](const Monomial<N>& m) { return degree - total_degree<N>(m); });
}

/// Substitutes polynomials in M variables for each of the N variables.
template <class K, std::size_t N, std::size_t M>
Polynomial<K, M> compose(const Polynomial<K, N>& p, const std::array<Polynomial<K, M>, N>& args) {
    std::array<std::vector<Polynomial<K, M>>, N> powers;
    for (std::size_t i = 0; i < N; ++i) {
        int top = p.degree_in(i).is_finite() ? p.degree_in(i).value() : 0;
        powers[i].push_back(Polynomial<K, M>(K(1)));
        for (int e = 1; e <= top; ++e)
            powers[i].push_back(powers[i].back() * args[i]);
    }
    Polynomial<K, M> r;
    for (const auto& [m, c] : p.terms()) {
        Polynomial<K, M> t(c);
        for (std::size_t i = 0; i < N; ++i)
            if (m[i])
                t *= powers[i][m[i]];
        r += t;
    }
    return r;
}

}  // namespace curveforge
