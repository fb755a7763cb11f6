#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "curveforge/rational.hpp"

namespace curveforge {

/// Squarefree part of a nonzero integer, sign preserved: 8 -> 2, -12 -> -3.
/// Returns the square factor through `square_root` (so n = square_root^2 * result).
std::int64_t squarefree_part(std::int64_t n, std::int64_t* square_root = nullptr);

/// Element a + b*sqrt(d) of Q(sqrt(d)), d squarefree and not 0 or 1.
///
/// Rational elements are stored with b = 0 and d = 0, so a rational value
/// compares equal to itself no matter which field it came from. Arithmetic
/// between two irrational elements with different d throws IncompatibleField.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    QuadExt(I n) : a_(n) {}  // NOLINT(google-explicit-constructor)

    /// a + b*sqrt(d) with d reduced to its squarefree part. Requires d != 0.
    static QuadExt make(const Rat& a, const Rat& b, std::int64_t d);

    /// The square root of a rational number, rational if possible, otherwise
    /// in Q(sqrt(squarefree part)). Throws Inconclusive when the radicand does
    /// not fit the 64-bit field discriminant.
    static QuadExt sqrt_of(const Rat& x);

    const Rat& a() const noexcept { return a_; }
    const Rat& b() const noexcept { return b_; }
    /// 0 for rational elements.
    std::int64_t d() const noexcept { return d_; }

    bool is_rational() const noexcept { return b_.is_zero(); }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const noexcept { return b_.is_zero() && a_.is_one(); }

    QuadExt conjugate() const;
    /// a^2 - d b^2.
    Rat norm() const;
    QuadExt inverse() const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) = default;
    /// Structural order (a, then b, then d); used only for deterministic output.
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

    /// Square root inside Q(sqrt(field)) where `field` is 0 (meaning Q) or the
    /// discriminant this element lives in. nullopt when no root exists there.
    std::optional<QuadExt> sqrt_in_field(std::int64_t field) const;

    /// "p/q", "sqrt(-1)", "1 - 2*sqrt(3)", ...
    std::string str() const;

private:
    Rat a_;
    Rat b_;
    std::int64_t d_ = 0;

    void settle();
    static std::int64_t common_field(const QuadExt& x, const QuadExt& y);
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

/// The common field of two discriminants (0 = Q); throws IncompatibleField.
std::int64_t join_fields(std::int64_t d1, std::int64_t d2);

}  // namespace curveforge
