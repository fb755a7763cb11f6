#include "curveforge/quad_ext.hpp"

#include <cstdlib>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

std::uint64_t isqrt_u64(std::uint64_t m) {
    mpz_class z(std::to_string(m));
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return std::stoull(r.get_str());
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x.sign() < 0)
        return std::nullopt;
    BigInt n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(rn, rd);
}

}  // namespace

std::int64_t squarefree_part(std::int64_t n, std::int64_t* square_root) {
    if (n == 0)
        throw InputError("squarefree part of zero");
    const bool negative = n < 0;
    // 2^63 is representable as unsigned, so INT64_MIN is fine here.
    std::uint64_t m = negative ? std::uint64_t(0) - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    std::uint64_t core = 1, root = 1;
    for (std::uint64_t p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % (p * p) == 0) {
            m /= p * p;
            root *= p;
        }
        if (m % p == 0) {
            m /= p;
            core *= p;
        }
    }
    // What is left has at most two prime factors, all above the cube root.
    if (m > 1) {
        std::uint64_t s = isqrt_u64(m);
        if (s * s == m) {
            root *= s;
            m = 1;
        }
    }
    core *= m;
    if (square_root)
        *square_root = static_cast<std::int64_t>(root);
    return negative ? -static_cast<std::int64_t>(core) : static_cast<std::int64_t>(core);
}

std::int64_t join_fields(std::int64_t d1, std::int64_t d2) {
    if (d1 == 0)
        return d2;
    if (d2 == 0 || d1 == d2)
        return d1;
    throw IncompatibleField("mixed radicals sqrt(" + std::to_string(d1) + ") and sqrt(" +
                            std::to_string(d2) + ") are not supported");
}

QuadExt QuadExt::make(const Rat& a, const Rat& b, std::int64_t d) {
    if (d == 0)
        throw InputError("quadratic extension with d = 0");
    std::int64_t root = 1;
    std::int64_t core = squarefree_part(d, &root);
    Rat scaled = b * Rat(root);
    if (core == 1)
        return QuadExt(a + scaled);
    QuadExt x;
    x.a_ = a;
    x.b_ = scaled;
    x.d_ = core;
    x.settle();
    return x;
}

QuadExt QuadExt::sqrt_of(const Rat& x) {
    if (x.is_zero())
        return QuadExt();
    if (auto r = rational_sqrt(x))
        return QuadExt(*r);
    // sqrt(p/q) = sqrt(p*q)/q
    Rat radicand(BigInt(x.num() * x.den()));
    if (!radicand.fits_int64())
        throw Inconclusive("radicand " + x.str() + " exceeds the supported quadratic-field range");
    return make(Rat(0), Rat(BigInt(1), x.den()), radicand.to_int64());
}

void QuadExt::settle() {
    if (b_.is_zero())
        d_ = 0;
}

std::int64_t QuadExt::common_field(const QuadExt& x, const QuadExt& y) {
    return join_fields(x.d_, y.d_);
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rat QuadExt::norm() const {
    return a_ * a_ - Rat(d_) * b_ * b_;
}

QuadExt QuadExt::inverse() const {
    if (is_zero())
        throw InputError("division by zero");
    Rat n = norm();
    QuadExt r = conjugate();
    r.a_ /= n;
    r.b_ /= n;
    return r;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = common_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    settle();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = common_field(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    settle();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    std::int64_t d = common_field(*this, o);
    if (d == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rat a = a_ * o.a_ + Rat(d) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    settle();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    common_field(*this, o);
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    if (auto c = x.a_ <=> y.a_; c != 0)
        return c;
    if (auto c = x.b_ <=> y.b_; c != 0)
        return c;
    return x.d_ <=> y.d_;
}

std::optional<QuadExt> QuadExt::sqrt_in_field(std::int64_t field) const {
    if (is_rational()) {
        if (a_.is_zero())
            return QuadExt();
        if (auto r = rational_sqrt(a_))
            return QuadExt(*r);
        if (field != 0) {
            if (auto s = rational_sqrt(a_ / Rat(field))) {
                QuadExt x;
                x.a_ = Rat(0);
                x.b_ = *s;
                x.d_ = field;
                return x;
            }
        }
        return std::nullopt;
    }
    if (field != d_)
        throw IncompatibleField("element of Q(sqrt(" + std::to_string(d_) + ")) queried in field " +
                                std::to_string(field));
    // (p + q sqrt d)^2 = a + b sqrt d  <=>  p^2 + d q^2 = a, 2 p q = b.
    auto n = rational_sqrt(norm());
    if (!n)
        return std::nullopt;
    for (int s : {1, -1}) {
        Rat p2 = (a_ + Rat(s) * *n) / Rat(2);
        auto p = rational_sqrt(p2);
        if (!p || p->is_zero())
            continue;
        QuadExt x;
        x.a_ = *p;
        x.b_ = b_ / (Rat(2) * *p);
        x.d_ = d_;
        x.settle();
        return x;
    }
    return std::nullopt;
}

std::string QuadExt::str() const {
    if (is_rational())
        return a_.str();
    std::string radical = "sqrt(" + std::to_string(d_) + ")";
    Rat mag = abs(b_);
    std::string bpart = mag.is_one() ? radical : mag.str() + "*" + radical;
    if (a_.is_zero())
        return (b_.sign() < 0 ? "-" : "") + bpart;
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + bpart;
}

}  // namespace curveforge
