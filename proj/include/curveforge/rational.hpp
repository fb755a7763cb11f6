#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace curveforge {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_t; it exists so that templates never see
/// gmpxx expression types and so that the canonical form is always restored.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I n) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>)
            v_ = static_cast<long>(n);
        else
            v_ = static_cast<unsigned long>(n);
    }

    Rat(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

    /// Throws InputError when `den` is zero.
    Rat(const BigInt& num, const BigInt& den);

    /// Accepts "p" or "p/q" with an optional leading sign.
    static Rat parse(std::string_view text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }
    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    /// Throws InputError on division by zero.
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat inverse() const;

    /// "p" or "p/q".
    std::string str() const;

    /// Fits in a signed 64-bit integer (and is an integer).
    bool fits_int64() const;
    std::int64_t to_int64() const;

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    mpq_class v_;
};

Rat abs(const Rat& x);
Rat pow(const Rat& x, unsigned e);

inline std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

/// Least common multiple of the denominators and gcd of the numerators,
/// used to make coefficient vectors primitive.
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace curveforge
