#pragma once

// Certified continued fractions and the Dujella-Petho (Baker-Davenport)
// reduction step: given tau, mu, A > 0, B > 1 and M >= 1, a convergent
// denominator q of tau with q > 6M and eps := ||mu q|| - M ||tau q|| > 0
// implies that 0 < |m tau - n + mu| < A B^(-k) with m <= M forces
// k < ln(A q / eps) / ln B.

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "narayana/interval.hpp"

namespace narayana {

struct ContinuedFraction {
    std::vector<mpz_class> quotients;                         // a0, a1, ...
    std::vector<std::pair<mpz_class, mpz_class>> convergents;  // (p_k, q_k)

    // p_k q_(k-1) - p_(k-1) q_k alternates between -1 and +1 exactly
    // (seeded with the virtual convergent (1, 0)), and q_k is strictly
    // increasing from k = 1 on.
    bool determinant_ok() const;

    // Index of the first convergent with q > threshold, if present.
    std::optional<size_t> first_q_above(const mpz_class& threshold) const;
};

// Certified expansion of the number described by `recipe`: partial quotients
// are the longest common prefix of the exact Euclidean expansions of the two
// (dyadic rational) enclosure endpoints — every real inside the enclosure
// shares that prefix, because the set of reals whose expansion starts with a
// fixed prefix is an interval containing both endpoints.  Precision
// escalates until the prefix covers the first q > min_q plus `extra` further
// quotients; the result is truncated there, so any sufficient starting
// precision yields identical output.  Throws EscalationError (naming the
// index reached) if the budget's max_bits cannot certify enough quotients.
ContinuedFraction expand_cf(const IntervalRecipe& recipe,
                            const mpz_class& min_q,
                            const PrecisionBudget& budget, int extra = 8);

// Exact expansion of a rational.  The full (finite) canonical expansion is
// computed by the Euclidean algorithm and truncated like above; throws
// DomainError if it terminates before any q exceeds min_q.
ContinuedFraction expand_cf(const mpq_class& tau, const mpz_class& min_q,
                            int extra = 8);

// One reduction problem.  The real inputs are recipes so every certification
// failure can re-evaluate them at higher precision; exactness is never
// assumed.
struct ReductionInstance {
    IntervalRecipe tau;
    IntervalRecipe mu;
    IntervalRecipe A;  // > 0
    IntervalRecipe B;  // > 1
    mpz_class M;       // bound on the integer coefficient m; >= 1
};

// Result of a successful reduction of one instance.
struct ReductionOutcome {
    mpz_class q_used;
    RealInterval epsilon;  // epsilon.lo > 0
    long k_bound = 0;      // every solution has k < k_bound
};

// eps = ||mu q|| - M ||tau q|| as a certified enclosure.  Returns nothing
// when eps is certified nonpositive (the caller should retry with the next
// convergent); throws EscalationError when the sign cannot be certified at
// max_bits; throws DomainError unless q > 6M.
std::optional<RealInterval> epsilon(const ReductionInstance& inst,
                                    const mpz_class& q,
                                    const PrecisionBudget& budget);

// Smallest K certified to exclude all solutions with k >= K:
// K = floor(upper enclosure of ln(A q / eps) / ln B) + 1.  The off-by-one
// is resolved conservatively upward.  Requires eps.lo > 0.
long reduced_bound(const ReductionInstance& inst, const mpz_class& q,
                   const RealInterval& eps, const PrecisionBudget& budget);

// From |e^x - 1| <= g with g < 1/2, conclude |x| <= 2g (either sign of x).
// Throws DomainError unless 0 <= g.lo and g.hi < 1/2.
RealInterval small_linear_form_bound(const RealInterval& gamma_abs);

// The two concrete instances this tool reduces.  Both share
// tau = ln 10 / ln alpha.  Stage 1 comes from
//   |(m1+m2) tau - n + ln(d1/(9a))/ln alpha| < (56/ln alpha) 10^(-m1),
// so A = 56/ln alpha, B = 10, m = m1+m2 <= M, k = m1.  Stage 2 comes from
//   |m2 tau - n + ln((d1 10^m1 - (d1-d2))/(9a))/ln alpha|
//       < (4/ln alpha) alpha^(-n),
// so A = 4/ln alpha, B = alpha, m = m2 <= M, k = n.
IntervalRecipe tau_recipe();
ReductionInstance stage1_instance(int d1, const mpz_class& M);
ReductionInstance stage2_instance(int d1, int d2, long m1, const mpz_class& M);

}  // namespace narayana
