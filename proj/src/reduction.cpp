#include "narayana/reduction.hpp"

#include <string>

#include "narayana/sequence.hpp"

namespace narayana {

namespace {

// Canonical (Euclidean) continued fraction of an exact rational.  The last
// quotient of a non-integer rational always comes out >= 2, so the output is
// the canonical form.
std::vector<mpz_class> euclid_cf(mpq_class x, size_t max_terms) {
    std::vector<mpz_class> out;
    while (out.size() < max_terms) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), x.get_num().get_mpz_t(),
                   x.get_den().get_mpz_t());
        out.push_back(a);
        mpq_class frac = x - mpq_class(a);
        if (frac == 0)
            break;
        x = mpq_class(1) / frac;
    }
    return out;
}

std::vector<std::pair<mpz_class, mpz_class>> build_convergents(
    const std::vector<mpz_class>& a) {
    std::vector<std::pair<mpz_class, mpz_class>> c;
    c.reserve(a.size());
    mpz_class p_prev = 1, q_prev = 0;  // virtual (p_-1, q_-1)
    mpz_class p_prev2 = 0, q_prev2 = 1;
    for (const mpz_class& ak : a) {
        mpz_class p = ak * p_prev + p_prev2;
        mpz_class q = ak * q_prev + q_prev2;
        c.emplace_back(p, q);
        p_prev2 = p_prev;
        q_prev2 = q_prev;
        p_prev = p;
        q_prev = q;
    }
    return c;
}

ContinuedFraction truncate_at(std::vector<mpz_class> quotients,
                              const mpz_class& min_q, int extra,
                              bool require_hit) {
    ContinuedFraction cf;
    cf.quotients = std::move(quotients);
    cf.convergents = build_convergents(cf.quotients);
    std::optional<size_t> k0 = cf.first_q_above(min_q);
    if (!k0) {
        if (require_hit)
            throw DomainError(
                "continued fraction terminated before any denominator "
                "exceeded the requested minimum");
        return cf;  // caller decides whether the partial prefix suffices
    }
    size_t keep = *k0 + 1 + static_cast<size_t>(extra);
    if (keep < cf.quotients.size()) {
        cf.quotients.resize(keep);
        cf.convergents.resize(keep);
    }
    return cf;
}

}  // namespace

bool ContinuedFraction::determinant_ok() const {
    if (convergents.size() != quotients.size() || convergents.empty())
        return false;
    for (size_t k = 1; k < quotients.size(); ++k)
        if (quotients[k] < 1)
            return false;
    mpz_class p_prev = 1, q_prev = 0;  // virtual (p_-1, q_-1)
    int expected = -1;                 // p_0*0 - 1*q_0 = -1, then alternate
    for (const auto& [p, q] : convergents) {
        mpz_class det = p * q_prev - p_prev * q;
        if (det != expected)
            return false;
        expected = -expected;
        p_prev = p;
        q_prev = q;
    }
    for (size_t k = 2; k < convergents.size(); ++k)
        if (convergents[k].second <= convergents[k - 1].second)
            return false;
    return true;
}

std::optional<size_t> ContinuedFraction::first_q_above(
    const mpz_class& threshold) const {
    for (size_t k = 0; k < convergents.size(); ++k)
        if (convergents[k].second > threshold)
            return k;
    return std::nullopt;
}

ContinuedFraction expand_cf(const mpq_class& tau, const mpz_class& min_q,
                            int extra) {
    if (min_q < 1)
        throw DomainError("expansion threshold min_q must be >= 1");
    if (extra < 0)
        throw DomainError("extra quotient count cannot be negative");
    // A rational's expansion is finite; no cap needed beyond its length.
    return truncate_at(euclid_cf(tau, static_cast<size_t>(-1)), min_q, extra,
                       /*require_hit=*/true);
}

ContinuedFraction expand_cf(const IntervalRecipe& recipe,
                            const mpz_class& min_q,
                            const PrecisionBudget& budget, int extra) {
    budget.validate();
    if (min_q < 1)
        throw DomainError("expansion threshold min_q must be >= 1");
    if (extra < 0)
        throw DomainError("extra quotient count cannot be negative");
    // Denominators grow at least as fast as Fibonacci numbers, so the first
    // q > min_q appears well inside this many quotients for any min_q that
    // fits the problem; the cap only guards the Euclidean walk.
    const size_t cap = 512 + static_cast<size_t>(extra);
    mpfr_prec_t prec = budget.working_bits;
    for (;;) {
        RealInterval x = recipe(prec);
        if (x.width() == 0)  // the recipe pinned an exact dyadic value
            return expand_cf(x.lo_q(), min_q, extra);
        std::vector<mpz_class> lo_cf = euclid_cf(x.lo_q(), cap);
        std::vector<mpz_class> hi_cf = euclid_cf(x.hi_q(), cap);
        size_t common = 0;
        while (common < lo_cf.size() && common < hi_cf.size() &&
               lo_cf[common] == hi_cf[common])
            ++common;
        lo_cf.resize(common);
        ContinuedFraction cf =
            truncate_at(std::move(lo_cf), min_q, extra, /*require_hit=*/false);
        std::optional<size_t> k0 = cf.first_q_above(min_q);
        if (k0 && cf.quotients.size() >=
                      *k0 + 1 + static_cast<size_t>(extra))
            return cf;
        if (prec >= budget.max_bits)
            throw EscalationError(
                "cannot certify the partial quotient at index " +
                std::to_string(cf.quotients.size()) + " at max precision");
        prec = budget.next(prec);
    }
}

std::optional<RealInterval> epsilon(const ReductionInstance& inst,
                                    const mpz_class& q,
                                    const PrecisionBudget& budget) {
    budget.validate();
    if (inst.M < 1)
        throw DomainError("reduction needs M >= 1");
    if (q <= 6 * inst.M)
        throw DomainError("epsilon needs a convergent denominator q > 6M");
    mpfr_prec_t prec = budget.working_bits;
    for (;;) {
        std::optional<RealInterval> straddle;
        try {
            RealInterval tau_q = inst.tau(prec).mul_z(q);
            RealInterval mu_q = inst.mu(prec).mul_z(q);
            RealInterval e = dist_to_nearest_int(mu_q) -
                             dist_to_nearest_int(tau_q).mul_z(inst.M);
            if (e.is_positive())
                return e;
            if (e.hi_q() <= 0)
                return std::nullopt;  // certified unusable, caller retries
            straddle = std::move(e);
        } catch (const AmbiguityError&) {
            // inputs too wide for the nearest-integer distance; escalate
        }
        if (prec >= budget.max_bits) {
            if (straddle)
                throw EscalationError(
                    "epsilon sign undecided at max precision", *straddle);
            throw EscalationError(
                "epsilon operands too wide at max precision");
        }
        prec = budget.next(prec);
    }
}

long reduced_bound(const ReductionInstance& inst, const mpz_class& q,
                   const RealInterval& eps, const PrecisionBudget& budget) {
    budget.validate();
    if (!(eps.lo_q() > 0))
        throw DomainError("reduced_bound needs a certified positive epsilon");
    const mpfr_prec_t prec = budget.working_bits;
    RealInterval A = inst.A(prec);
    RealInterval B = inst.B(prec);
    if (!A.is_positive())
        throw DomainError("reduction needs A > 0");
    if (!(B.lo_q() > 1))
        throw DomainError("reduction needs B > 1");
    // Any enclosure's upper endpoint is a valid bound, so one evaluation at
    // working precision is enough and keeps the result deterministic.
    RealInterval val = (A.mul_z(q) / eps).ln() / B.ln();
    mpz_class k = val.floor_upper() + 1;
    if (!k.fits_slong_p())
        throw DomainError("reduced bound does not fit a machine integer");
    return k.get_si();
}

RealInterval small_linear_form_bound(const RealInterval& gamma_abs) {
    if (gamma_abs.lo_q() < 0)
        throw DomainError("an absolute-value bound cannot be negative");
    if (!gamma_abs.upper_below(mpq_class(1, 2)))
        throw DomainError(
            "the |e^x - 1| < 1/2 hypothesis is not certified; establish it "
            "before converting to a bound on |x|");
    return gamma_abs.mul_z(2);
}

IntervalRecipe tau_recipe() {
    return [](mpfr_prec_t prec) {
        return cached_ln10(prec) / cached_ln_alpha(prec);
    };
}

ReductionInstance stage1_instance(int d1, const mpz_class& M) {
    if (d1 < 1 || d1 > 9)
        throw DomainError("stage-1 instance needs d1 in 1..9");
    return ReductionInstance{
        tau_recipe(),
        [d1](mpfr_prec_t prec) {
            RealInterval nine_a =
                RealInterval::from_int(9, prec) * cached_a(prec);
            return (RealInterval::from_int(d1, prec).ln() - nine_a.ln()) /
                   cached_ln_alpha(prec);
        },
        [](mpfr_prec_t prec) {
            return RealInterval::from_int(56, prec) / cached_ln_alpha(prec);
        },
        [](mpfr_prec_t prec) { return RealInterval::from_int(10, prec); },
        M};
}

ReductionInstance stage2_instance(int d1, int d2, long m1, const mpz_class& M) {
    if (d1 < 1 || d1 > 9 || d2 < 0 || d2 > 9 || m1 < 1)
        throw DomainError("stage-2 instance needs d1 in 1..9, d2 in 0..9, "
                          "m1 >= 1");
    // d1*10^m1 - (d1-d2) is an exact positive integer (>= 10 - 9 = 1).
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(m1));
    mpz_class num = d1 * pow10 - (d1 - d2);
    return ReductionInstance{
        tau_recipe(),
        [num](mpfr_prec_t prec) {
            RealInterval nine_a =
                RealInterval::from_int(9, prec) * cached_a(prec);
            return (RealInterval::from_int(num, prec).ln() - nine_a.ln()) /
                   cached_ln_alpha(prec);
        },
        [](mpfr_prec_t prec) {
            return RealInterval::from_int(4, prec) / cached_ln_alpha(prec);
        },
        [](mpfr_prec_t prec) { return cached_alpha(prec); },
        M};
}

}  // namespace narayana
