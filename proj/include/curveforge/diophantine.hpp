#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "curveforge/polynomial.hpp"

namespace curveforge {

struct MasonReport {
    int deg_a = 0, deg_b = 0, deg_c = 0;
    int rad_degree = 0;
    /// deg rad(ABC) - 1 - max degree; nonnegative when the inequality holds.
    int slack = 0;
    bool holds = false;
};

/// max deg <= deg rad(ABC) - 1 for coprime A + B + C = 0. Throws InputError
/// for a zero polynomial, a nonzero sum, a common factor or all-constant
/// input; TheoremContradiction if the inequality fails.
MasonReport mason_check(const UniPoly<Rat>& A, const UniPoly<Rat>& B, const UniPoly<Rat>& C);

struct FermatReport {
    enum class Verdict { NotASolution, Trivial, Constant, Solution };
    Verdict verdict = Verdict::NotASolution;
    /// Monic gcd removed before classifying.
    UniPoly<Rat> common;
    std::string detail;
};

std::string to_string(FermatReport::Verdict v);

/// Classifies x^n + y^n = z^n. Throws InputError for n < 2 and
/// TheoremContradiction for a nonconstant coprime solution with n > 2.
FermatReport fermat_poly_check(const UniPoly<Rat>& x, const UniPoly<Rat>& y, const UniPoly<Rat>& z, int n);

struct PellReport {
    enum class SolutionStatus { None, Verified, Trivial, Invalid };
    int degree = 0;
    /// Number of distinct roots of D.
    int distinct_roots = 0;
    int bound = 0;
    bool possible = false;
    SolutionStatus solution = SolutionStatus::None;
};

std::string to_string(PellReport::SolutionStatus s);

/// Degree obstruction for X^2 - D*Y^2 = 1: impossible when deg D > 2n(D) - 2.
/// Throws InputError for constant D and TheoremContradiction for a verified
/// nontrivial solution when the verdict is impossible.
PellReport pell_bound_check(const UniPoly<Rat>& D,
                            const std::optional<std::pair<UniPoly<Rat>, UniPoly<Rat>>>& solution = std::nullopt);

struct LocalConfig {
    std::int64_t prime_cap = 10007;
    bool cross_check = false;
};

struct LocalCert {
    std::int64_t b1 = 0, a = 0, b2 = 0, p = 0;
    std::int64_t m = 0, n = 0, e = 0;
    /// "2e", "dm" or "dn": the partial derivative that is nonzero mod p.
    std::string witness;
    std::int64_t witness_value = 0;
    /// p does not divide 2*a*b1*b2*(a^2 - 4*b1*b2).
    bool condition = false;
    /// Result of the conic-route search when requested and applicable.
    std::optional<bool> cross_check_found;
};

/// Smallest (n, then m) point of b1*m^4 + a*m^2*n^2 + b2*n^4 = e^2 over F_p
/// with (m, n) != (0, 0) and a nonzero partial, smallest e. Throws InputError
/// for p = 2, composite p, p above the cap or b1*b2 = 0; TheoremContradiction
/// when the search is exhausted although the condition holds (or when the
/// two search routes disagree); Inconclusive when exhausted otherwise.
LocalCert local_solvability(std::int64_t b1, std::int64_t a, std::int64_t b2, std::int64_t p,
                            const LocalConfig& config = {});

/// Recomputes the congruence and the smoothness witness of a certificate.
bool recheck_local(const LocalCert& cert);

}  // namespace curveforge
