// Narayana's cow sequence N(n+3) = N(n+2) + N(n), N0 = 0, N1 = N2 = 1:
// exact big-integer terms, the dominant-root (Binet) parameters, and the
// certified growth/residual envelopes that tie an index to a digit count.
#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>

#include "narayana/cubic.hpp"
#include "narayana/interval.hpp"

namespace narayana {

// Kept explicit so the recurrence definition is data, not folklore.
struct RecurrenceDef {
    int order = 3;
    std::array<long, 3> coefficients{1, 0, 1};  // N(k+3) = 1*N(k+2) + 0*N(k+1) + 1*N(k)
    std::array<long, 3> initial_terms{0, 1, 1};
};

inline constexpr RecurrenceDef narayana_recurrence{};

// Binet data: N(n) = a*alpha^n + b*beta^n + c*gamma^n with |beta| = |gamma| < 1.
struct BinetParams {
    RealInterval alpha;              // real root of x^3 - x^2 - 1
    ComplexPairEnclosure beta_gamma; // conjugate pair
    RealInterval a;                  // alpha^2 / (alpha^3 + 2)
    RealInterval bc_modulus;         // |beta| = |gamma|, certified < 1
};

// Exact N(n) by iterated recurrence.
mpz_class term(unsigned long n);

// Independent oracle: N(n) mod `modulus` via 3x3 matrix fast exponentiation.
mpz_class term_mod_matrix(unsigned long n, const mpz_class& modulus);

BinetParams binet_params(const PrecisionBudget& budget);

// Memoized per-precision enclosures of the constants every stage shares.
RealInterval cached_alpha(mpfr_prec_t prec);
RealInterval cached_a(mpfr_prec_t prec);
RealInterval cached_ln_alpha(mpfr_prec_t prec);
RealInterval cached_ln10(mpfr_prec_t prec);

// Certified |N(n) - a*alpha^n| < alpha^(-n/2)  (residual envelope; n >= 1).
bool residual_bound_check(unsigned long n, const PrecisionBudget& budget);

// Certified alpha^(n-3) <= N(n) <= alpha^(n-1)  (dominant-root growth
// envelope; n >= 1).  Note the lower exponent: n-3 is the exponent this
// sequence actually satisfies from n = 1 on (alpha^(n-2) already exceeds
// N(n) at n = 9, where alpha^7 > 13).
bool dominant_bounds_check(unsigned long n, const PrecisionBudget& budget);

// Index window from a digit count s = m1+m2 >= 2: the integers n with
//   s*ln(10) - 2 < n*ln(alpha) < s*ln(10) + 1.
// Returned as (n_min, n_max), conservative under interval ambiguity.
std::pair<long, long> index_window(unsigned long total_digits,
                                   const PrecisionBudget& budget);

}  // namespace narayana
