#include "curveforge/rational.hpp"

#include <limits>

#include "curveforge/error.hpp"

namespace curveforge {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(BigInt(s, 10));
        return Rat(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw InputError("not a rational number: '" + s + "'");
    }
}

Rat Rat::operator-() const {
    Rat r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw InputError("division by zero");
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rat Rat::inverse() const {
    return Rat(1) / *this;
}

std::string Rat::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rat::fits_int64() const {
    if (!is_integer())
        return false;
    static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return v_.get_num() >= lo && v_.get_num() <= hi;
}

std::int64_t Rat::to_int64() const {
    if (!fits_int64())
        throw InputError("value does not fit in a 64-bit integer: " + str());
    return std::stoll(v_.get_num().get_str());
}

Rat abs(const Rat& x) {
    return x.sign() < 0 ? -x : x;
}

Rat pow(const Rat& x, unsigned e) {
    Rat result(1);
    Rat base = x;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace curveforge
