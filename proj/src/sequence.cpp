#include "narayana/sequence.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace narayana {

mpz_class term(unsigned long n) {
    const auto& def = narayana_recurrence;
    mpz_class t0 = def.initial_terms[0];
    mpz_class t1 = def.initial_terms[1];
    mpz_class t2 = def.initial_terms[2];
    if (n == 0)
        return t0;
    if (n == 1)
        return t1;
    if (n == 2)
        return t2;
    for (unsigned long k = 3; k <= n; ++k) {
        mpz_class next = def.coefficients[0] * t2 + def.coefficients[1] * t1 +
                         def.coefficients[2] * t0;
        t0 = t1;
        t1 = t2;
        t2 = next;
    }
    return t2;
}

namespace {

using Mat = std::array<mpz_class, 9>;  // row-major 3x3

Mat mat_mul_mod(const Mat& x, const Mat& y, const mpz_class& m) {
    Mat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 3; ++k)
                s += x[3 * i + k] * y[3 * k + j];
            mpz_class rem;
            mpz_mod(rem.get_mpz_t(), s.get_mpz_t(), m.get_mpz_t());
            r[3 * i + j] = rem;
        }
    return r;
}

}  // namespace

mpz_class term_mod_matrix(unsigned long n, const mpz_class& modulus) {
    if (modulus <= 0)
        throw DomainError("term_mod_matrix: modulus must be positive");
    // State (N(k+2), N(k+1), N(k)) advances by M = [[1,0,1],[1,0,0],[0,1,0]].
    Mat m{1, 0, 1, 1, 0, 0, 0, 1, 0};
    Mat acc{1, 0, 0, 0, 1, 0, 0, 0, 1};
    unsigned long e = n;
    while (e > 0) {
        if (e & 1UL)
            acc = mat_mul_mod(acc, m, modulus);
        m = mat_mul_mod(m, m, modulus);
        e >>= 1;
    }
    // (N(n+2), N(n+1), N(n))^T = M^n * (1, 1, 0)^T; take the third row.
    mpz_class v = acc[6] * 1 + acc[7] * 1 + acc[8] * 0;
    mpz_class rem;
    mpz_mod(rem.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return rem;
}

BinetParams binet_params(const PrecisionBudget& budget) {
    CubicRoots roots = isolate_cubic_roots(1, -1, 0, -1, budget);
    const mpfr_prec_t prec = roots.real_root.prec();
    BinetParams bp;
    bp.alpha = roots.real_root;
    bp.beta_gamma = roots.complex_pair;
    bp.bc_modulus = roots.complex_pair.modulus;
    // a = alpha^2 / (alpha^3 + 2)
    bp.a = bp.alpha.pow_int(2) /
           (bp.alpha.pow_int(3) + RealInterval::from_int(2, prec));
    if (!bp.bc_modulus.upper_below(1))
        throw EscalationError("binet: cannot certify |beta| < 1", bp.bc_modulus);
    return bp;
}

namespace {

struct ConstantSet {
    RealInterval alpha, a, ln_alpha, ln10;
};

const ConstantSet& constants_at(mpfr_prec_t prec) {
    static std::map<mpfr_prec_t, ConstantSet> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> guard(mu);
    auto it = memo.find(prec);
    if (it == memo.end()) {
        PrecisionBudget b{prec, prec, 2};
        BinetParams bp = binet_params(b);
        ConstantSet cs;
        cs.alpha = bp.alpha;
        cs.a = bp.a;
        cs.ln_alpha = bp.alpha.ln();
        cs.ln10 = RealInterval::from_int(10, prec).ln();
        it = memo.emplace(prec, std::move(cs)).first;
    }
    return it->second;  // map nodes are stable; insert-only under the mutex
}

}  // namespace

RealInterval cached_alpha(mpfr_prec_t prec) { return constants_at(prec).alpha; }
RealInterval cached_a(mpfr_prec_t prec) { return constants_at(prec).a; }
RealInterval cached_ln_alpha(mpfr_prec_t prec) { return constants_at(prec).ln_alpha; }
RealInterval cached_ln10(mpfr_prec_t prec) { return constants_at(prec).ln10; }

bool residual_bound_check(unsigned long n, const PrecisionBudget& budget) {
    if (n < 1)
        throw DomainError("residual_bound_check: n must be >= 1");
    mpz_class nn = term(n);
    return decide(
        [&](mpfr_prec_t prec) -> std::optional<bool> {
            const auto& c = constants_at(prec);
            RealInterval an = c.alpha.pow_int(static_cast<long>(n));
            RealInterval resid =
                (RealInterval::from_int(nn, prec) - c.a * an).abs();
            // alpha^(-n/2) = sqrt(alpha)^(-n), valid for odd n too
            RealInterval rhs = c.alpha.sqrt().pow_int(-static_cast<long>(n));
            if (resid.certainly_less(rhs))
                return true;
            if (rhs.certainly_less(resid))
                return false;
            return std::nullopt;
        },
        budget, "residual bound at n=" + std::to_string(n));
}

bool dominant_bounds_check(unsigned long n, const PrecisionBudget& budget) {
    if (n < 1)
        throw DomainError("dominant_bounds_check: n must be >= 1");
    mpq_class nq(term(n));
    return decide(
        [&](mpfr_prec_t prec) -> std::optional<bool> {
            const auto& c = constants_at(prec);
            RealInterval lo_pow = c.alpha.pow_int(static_cast<long>(n) - 3);
            RealInterval hi_pow = c.alpha.pow_int(static_cast<long>(n) - 1);
            // Claim 1, alpha^(n-3) <= N(n): certified once the whole
            // enclosure sits at or below N(n); refuted once it sits above.
            if (lo_pow.lower_above(nq))
                return false;
            // Claim 2, N(n) <= alpha^(n-1): symmetric.
            if (hi_pow.upper_below(nq))
                return false;
            if (lo_pow.hi_q() <= nq && hi_pow.lo_q() >= nq)
                return true;
            return std::nullopt;
        },
        budget, "dominant-root bounds at n=" + std::to_string(n));
}

namespace {

// Exact floor of a certified quantity: escalates until both endpoints share
// the same floor.  Terminates whenever the true value is not an integer.
mpz_class certified_floor(const IntervalRecipe& recipe, const PrecisionBudget& budget,
                          const std::string& what) {
    mpfr_prec_t prec = budget.working_bits;
    for (;;) {
        RealInterval v = recipe(prec);
        mpz_class flo = v.floor_lower();
        mpz_class fhi = v.floor_upper();
        if (flo == fhi)
            return flo;
        if (prec >= budget.max_bits)
            throw EscalationError("certified_floor: undecided at max precision: " + what,
                                  std::move(v));
        prec = budget.next(prec);
    }
}

}  // namespace

std::pair<long, long> index_window(unsigned long total_digits,
                                   const PrecisionBudget& budget) {
    if (total_digits < 2)
        throw DomainError("index_window: total digit count must be >= 2");
    mpz_class s(static_cast<unsigned long>(total_digits));
    // n_min: least n with n*ln(alpha) > s*ln(10) - 2, i.e. floor(x_lo) + 1.
    mpz_class nmin =
        certified_floor(
            [&](mpfr_prec_t prec) {
                const auto& c = constants_at(prec);
                return (c.ln10.mul_z(s).add_q(mpq_class(-2))) / c.ln_alpha;
            },
            budget, "index window lower edge") +
        1;
    // n_max: greatest n with n*ln(alpha) < s*ln(10) + 1.  For non-integer x
    // this is floor(x); the quotient is irrational so the floor is exact.
    mpz_class nmax = certified_floor(
        [&](mpfr_prec_t prec) {
            const auto& c = constants_at(prec);
            return (c.ln10.mul_z(s).add_q(mpq_class(1))) / c.ln_alpha;
        },
        budget, "index window upper edge");
    return {nmin.get_si(), nmax.get_si()};
}

}  // namespace narayana
