#include "narayana/cubic.hpp"

#include <algorithm>

namespace narayana {

namespace {

struct Cubic {
    mpz_class c3, c2, c1, c0;

    mpq_class eval(const mpq_class& x) const {
        return ((mpq_class(c3) * x + c2) * x + c1) * x + c0;
    }
    mpq_class deriv(const mpq_class& x) const {
        return (mpq_class(3 * c3) * x + 2 * c2) * x + c1;
    }
};

// Rounds a rational to the dyadic grid with denominator 2^bits (toward zero;
// direction is irrelevant, the value is only a bisection probe).
mpq_class to_dyadic(const mpq_class& x, long bits) {
    mpz_class scaled = (x.get_num() << bits) / x.get_den();
    mpq_class r(scaled, mpz_class(1) << bits);
    r.canonicalize();
    return r;
}

}  // namespace

mpz_class cubic_discriminant(const mpz_class& c3, const mpz_class& c2,
                             const mpz_class& c1, const mpz_class& c0) {
    return 18 * c3 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
           4 * c3 * c1 * c1 * c1 - 27 * c3 * c3 * c0 * c0;
}

CubicRoots isolate_cubic_roots(const mpz_class& c3_in, const mpz_class& c2_in,
                               const mpz_class& c1_in, const mpz_class& c0_in,
                               const PrecisionBudget& budget) {
    budget.validate();
    if (c3_in == 0)
        throw DomainError("cubic: leading coefficient is zero");
    mpz_class disc = cubic_discriminant(c3_in, c2_in, c1_in, c0_in);
    if (disc >= 0)
        throw DomainError(
            "cubic: discriminant >= 0 (three real roots); expected one real root "
            "and a complex-conjugate pair");

    // Normalize to a positive leading coefficient so p(-inf) < 0 < p(+inf).
    Cubic p{c3_in, c2_in, c1_in, c0_in};
    if (p.c3 < 0) {
        p.c3 = -p.c3;
        p.c2 = -p.c2;
        p.c1 = -p.c1;
        p.c0 = -p.c0;
    }

    // Cauchy bound: all roots lie in |x| < 1 + max|c_i| / c3.
    mpz_class m = std::max({::abs(p.c2), ::abs(p.c1), ::abs(p.c0)});
    mpz_class bound = 2 + m / p.c3;  // integer ceiling of the Cauchy bound
    mpq_class lo(-bound), hi(bound);
    if (p.eval(lo) >= 0 || p.eval(hi) <= 0)
        throw std::logic_error("cubic: Cauchy bracket failed");

    // Target enclosure width 2^-(wb/2 + 2); the extra bits absorb the final
    // outward rounding into MPFR endpoints.
    const long goal_bits = static_cast<long>(budget.working_bits) / 2 + 2;
    mpq_class target(mpz_class(1), mpz_class(1) << goal_bits);

    long iteration = 0;
    const long max_iterations = 4 * goal_bits + 128;
    long grid_bits = 4;  // current dyadic grid; doubles once Newton kicks in
    while (hi - lo > target) {
        if (++iteration > max_iterations)
            throw EscalationError("cubic: bracket refinement failed to converge");

        mpq_class probe;
        bool have_newton = false;
        if (iteration > 24) {
            // Newton step from the midpoint, snapped to a dyadic grid so the
            // rational sizes stay linear in the precision.
            mpq_class mid = (lo + hi) / 2;
            mpq_class dp = p.deriv(mid);
            if (dp != 0) {
                grid_bits = std::min(4 * goal_bits, grid_bits * 2);
                probe = to_dyadic(mid - p.eval(mid) / dp, grid_bits);
                have_newton = probe > lo && probe < hi;
            }
        }
        if (!have_newton)
            probe = (lo + hi) / 2;

        int s = sgn(p.eval(probe));
        if (s == 0) {
            // Exact rational root: nudge to a sign-changing micro-bracket.
            mpq_class delta = target / 4;
            lo = probe - delta;
            hi = probe + delta;
            break;
        }
        mpq_class before = hi - lo;
        if (s < 0)
            lo = probe;
        else
            hi = probe;
        // A Newton probe near an endpoint can shrink the bracket only
        // marginally; force a bisection step when that happens.
        if (have_newton && (hi - lo) * 3 > before * 2) {
            mpq_class mid = (lo + hi) / 2;
            int sm = sgn(p.eval(mid));
            if (sm == 0) {
                mpq_class delta = target / 4;
                lo = mid - delta;
                hi = mid + delta;
                break;
            }
            if (sm < 0)
                lo = mid;
            else
                hi = mid;
        }
    }

    const mpfr_prec_t prec = budget.working_bits + 32;
    CubicRoots out;
    out.real_root = RealInterval::from_endpoints(lo, hi, prec);

    // Conjugate pair via exact symmetric functions of the roots:
    //   beta + conj(beta) = -c2/c3 - alpha,   beta * conj(beta) = (-c0/c3)/alpha.
    RealInterval alpha = out.real_root;
    mpq_class sum_all(-p.c2, p.c3);
    sum_all.canonicalize();
    mpq_class prod_all(-p.c0, p.c3);
    prod_all.canonicalize();
    RealInterval pair_sum = RealInterval::from_rational(sum_all, prec) - alpha;
    RealInterval pair_prod =
        RealInterval::from_rational(prod_all, prec) / alpha;
    if (!pair_prod.is_positive())
        throw EscalationError("cubic: cannot certify |beta|^2 > 0 at this precision",
                              pair_prod);
    RealInterval re = pair_sum * RealInterval::from_rational(mpq_class(1, 2), prec);
    RealInterval imag_sq = pair_prod - re * re;
    if (!imag_sq.is_positive())
        throw EscalationError(
            "cubic: cannot certify a nonreal conjugate pair at this precision",
            imag_sq);
    out.complex_pair.real_part = re;
    out.complex_pair.imag_part = imag_sq.sqrt();
    out.complex_pair.modulus = pair_prod.sqrt();
    return out;
}

}  // namespace narayana
