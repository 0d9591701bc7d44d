#pragma once

// Logarithmic heights, the Bugeaud-Mignotte-Siksek explicit lower bound for
// linear forms in logarithms of algebraic numbers, and the Guzman
// Sanchez-Luca resolver that turns n < c*(ln n)^r into an absolute bound.
// All logarithms are natural.  The literature this follows prints several
// intermediate constants that are only reproducible with base-10 logs; those
// are carried through the certificate as reference values but never used in
// the proof chain.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "narayana/interval.hpp"

namespace narayana {

// Certified upper bound on the logarithmic Weil height of some quantity,
// together with a human-readable trace of the height properties used.
struct HeightBound {
    RealInterval value;      // enclosure of the bound; value.lo >= 0
    std::string derivation;  // e.g. "h(9a/d1) <= h(9)+h(a)+h(d1) <= ..."
};

// Parameters of one application of the lower-bound theorem
//   ln|Lambda| > -1.4 * 30^(t+3) * t^4.5 * D^2 (1+ln D)(1+ln B) A_1...A_t.
struct LinearFormSpec {
    int t = 2;                    // number of multiplicands eta_j
    int D = 1;                    // degree of the containing number field
    std::string B_desc;           // symbolic bound on max|b_j|, e.g. "n"
    std::vector<RealInterval> A;  // A_j >= max(D*h(eta_j), |ln eta_j|, 0.16)
    std::vector<std::string> b_desc;  // exponent descriptors, e.g. "-n"

    void validate() const;  // throws DomainError on violation
};

// The absolute bounds produced by chaining the two linear-form applications
// and the resolver; everything the reduction stages and the certificate need.
struct InitialBounds {
    int r = 2;  // exponent in n < H * (ln n)^r handed to the resolver

    HeightBound h_eta1_step1;     // uniform height bound for 9a/d1, ~5.539
    RealInterval A1_step1;        // 3 * that height, ~16.62
    RealInterval matveev_stage1;  // C1: ln|Lambda_1| > -C1*(1+ln n)
    RealInterval m1_coeff;        // c1: m1*ln10 < c1*(1+ln n)
    HeightBound h_eta1_step2;     // value = c2: h(eta1 of stage 2) < c2*(1+ln n)
    RealInterval matveev_stage2;  // C2: ln|Lambda_2| > -C2*(1+ln n)^2
    RealInterval H;               // resolver input: n/(ln n)^2 < H
    mpz_class n_bound;            // unconditional integer bound on n
    mpz_class m_sum_bound;        // bound on m1+m2, from the digit-count window
};

// h(p/q) = ln max(|p|, q) for a fraction in lowest terms.
// Throws DomainError if q <= 0 or gcd(|p|, q) != 1.
HeightBound height_rational(const mpz_class& p, const mpz_class& q,
                            mpfr_prec_t prec);

// Uniform bound for the stage-1 left multiplicand 9a/d1 over d1 in 1..9:
// h <= h(9) + h(a) + h(d1) <= 2 ln 9 + (1/3) ln 31  (h(a) = (1/3) ln 31
// because a has minimal polynomial 31x^3 - 3x - 1 with all conjugates of
// modulus < 1; h(d1) <= ln 9).
HeightBound height_eta1_step1(mpfr_prec_t prec);

// Stage-2 left multiplicand (d1*10^m1 - (d1-d2)) / (9a).  Input is the
// stage-1 coefficient c1 with m1*ln10 < c1*(1+ln n); output is c2 with
// h <= c2*(1+ln n), where c2 = c1 + 4 ln 9 + (1/3) ln 31 + 2 ln 2 (the
// additive constants fold into the coefficient because 1+ln n >= 1).
HeightBound height_eta1_step2(const RealInterval& m1_log10_coeff,
                              mpfr_prec_t prec);

// The theorem's constant C = 1.4 * 30^(t+3) * t^4.5 * D^2 (1+ln D) * A_1..A_t
// WITHOUT the (1+ln B) factor, so ln|Lambda| > -C*(1+ln B).  Integer parts
// are computed exactly; transcendental parts as enclosures.
RealInterval matveev_coefficient(const LinearFormSpec& spec);

// Guzman Sanchez-Luca: if L/(ln L)^r < H with H > (4r^2)^r, then
// L < 2^r * H * (ln H)^r.  Returns the ceiling of the enclosure's upper
// endpoint.  Throws DomainError when the hypothesis H > (4r^2)^r fails.
mpz_class resolve_n_bound(int r, const RealInterval& H);

// Full chain: stage-1 linear form -> m1 coefficient -> stage-2 linear form
// -> n/(ln n)^2 < H (using n > 250) -> resolver -> n_bound, then the
// digit-count window m1+m2 < n*ln(alpha)/ln 10 + 1 -> m_sum_bound.
// Throws DomainError if n_bound <= 250 (the downstream case split would be
// vacuous; cannot happen with these constants).
InitialBounds initial_bounds(const PrecisionBudget& budget);

}  // namespace narayana
