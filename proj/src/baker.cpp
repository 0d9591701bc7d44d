#include "narayana/baker.hpp"

#include <sstream>

#include "narayana/sequence.hpp"

namespace narayana {

void LinearFormSpec::validate() const {
    if (t < 2)
        throw DomainError("linear form needs t >= 2 multiplicands");
    if (D < 1)
        throw DomainError("field degree must be >= 1");
    if (A.size() != static_cast<size_t>(t))
        throw DomainError("expected exactly t height majorants A_j");
    if (!b_desc.empty() && b_desc.size() != static_cast<size_t>(t))
        throw DomainError("expected exactly t exponent descriptors");
    const mpq_class floor_A(4, 25);  // the theorem requires A_j >= 0.16
    for (size_t j = 0; j < A.size(); ++j) {
        if (A[j].lo_q() < floor_A)
            throw DomainError("A_" + std::to_string(j + 1) +
                              " below the 0.16 floor");
    }
}

HeightBound height_rational(const mpz_class& p, const mpz_class& q,
                            mpfr_prec_t prec) {
    if (q <= 0)
        throw DomainError("height of p/q needs q > 0");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
        throw DomainError("height of p/q needs gcd(p, q) = 1");
    mpz_class m = abs(p);
    if (m < q)
        m = q;
    HeightBound hb{RealInterval::from_int(m, prec).ln(),
                   "h(" + p.get_str() + "/" + q.get_str() + ") = ln max(|p|, q) = ln " +
                       m.get_str()};
    return hb;
}

HeightBound height_eta1_step1(mpfr_prec_t prec) {
    RealInterval ln9 = RealInterval::from_int(9, prec).ln();
    RealInterval ln31_third =
        RealInterval::from_int(31, prec).ln() / RealInterval::from_int(3, prec);
    HeightBound hb{
        ln9.mul_z(2) + ln31_third,
        "h(9a/d1) <= h(9) + h(a) + h(d1) <= 2 ln 9 + (1/3) ln 31; "
        "h(a) = (1/3) ln 31 via minimal polynomial 31x^3 - 3x - 1, "
        "h(d1) <= ln 9"};
    return hb;
}

HeightBound height_eta1_step2(const RealInterval& m1_log10_coeff,
                              mpfr_prec_t prec) {
    RealInterval ln9 = RealInterval::from_int(9, prec).ln();
    RealInterval ln31_third =
        RealInterval::from_int(31, prec).ln() / RealInterval::from_int(3, prec);
    RealInterval ln2 = RealInterval::from_int(2, prec).ln();
    RealInterval c2 = m1_log10_coeff + ln9.mul_z(4) + ln31_third + ln2.mul_z(2);
    HeightBound hb{
        std::move(c2),
        "h((d1*10^m1 - (d1-d2))/(9a)) <= m1 ln 10 + 4 ln 9 + (1/3) ln 31 "
        "+ 2 ln 2; additive constants folded into the (1+ln n) coefficient"};
    return hb;
}

RealInterval matveev_coefficient(const LinearFormSpec& spec) {
    spec.validate();
    const mpfr_prec_t prec = spec.A.front().prec();
    // Exact part: 1.4 * 30^(t+3) * t^4 * D^2 = 7 * 30^(t+3) * t^4 * D^2 / 5.
    mpz_class pow30;
    mpz_ui_pow_ui(pow30.get_mpz_t(), 30, static_cast<unsigned long>(spec.t) + 3);
    mpz_class t4;
    mpz_ui_pow_ui(t4.get_mpz_t(), static_cast<unsigned long>(spec.t), 4);
    mpz_class num = 7 * pow30 * t4 * spec.D * spec.D;
    mpq_class exact(num, 5);
    exact.canonicalize();
    RealInterval c = RealInterval::from_rational(exact, prec);
    // Remaining t^0.5 and (1 + ln D) factors.
    c = c * RealInterval::from_int(spec.t, prec).sqrt();
    c = c * RealInterval::from_int(spec.D, prec).ln().add_q(1);
    for (const RealInterval& a : spec.A)
        c = c * a;
    return c;
}

mpz_class resolve_n_bound(int r, const RealInterval& H) {
    if (r < 1)
        throw DomainError("resolver needs r >= 1");
    mpz_class hyp;  // (4r^2)^r, exact
    mpz_ui_pow_ui(hyp.get_mpz_t(), 4ul * static_cast<unsigned long>(r) * r,
                  static_cast<unsigned long>(r));
    if (H.lo_q() <= hyp)
        throw DomainError("resolver hypothesis H > (4r^2)^r fails");
    mpz_class pow2r;
    mpz_ui_pow_ui(pow2r.get_mpz_t(), 2, static_cast<unsigned long>(r));
    RealInterval bound = H.ln().pow_int(r) * H;
    return bound.mul_z(pow2r).ceil_upper();
}

InitialBounds initial_bounds(const PrecisionBudget& budget) {
    budget.validate();
    const mpfr_prec_t prec = budget.working_bits;
    const RealInterval ln_alpha = cached_ln_alpha(prec);
    const RealInterval ln10 = cached_ln10(prec);

    InitialBounds ib;
    ib.r = 2;

    // Stage 1: |9a/d1 * alpha^n * 10^(-m1-m2) - 1| < 28/10^m1.
    ib.h_eta1_step1 = height_eta1_step1(prec);
    ib.A1_step1 = ib.h_eta1_step1.value.mul_z(3);  // A_j = D * h, D = 3
    LinearFormSpec stage1{3,
                          3,
                          "n",
                          {ib.A1_step1, ln_alpha, ln10.mul_z(3)},
                          {"1", "n", "-(m1+m2)"}};
    ib.matveev_stage1 = matveev_coefficient(stage1);
    // Comparing the theorem with the 28/10^m1 upper bound:
    //   m1 ln 10 - ln 28 < C1 (1+ln n), and 1+ln n >= 1 folds ln 28 in.
    ib.m1_coeff = ib.matveev_stage1 + RealInterval::from_int(28, prec).ln();

    // Stage 2: |(d1*10^m1-(d1-d2))/(9a) * alpha^(-n) * 10^m2 - 1| < 2/alpha^n.
    ib.h_eta1_step2 = height_eta1_step2(ib.m1_coeff, prec);
    LinearFormSpec stage2{
        3,
        3,
        "n",
        {ib.h_eta1_step2.value.mul_z(3), ln_alpha, ln10.mul_z(3)},
        {"1", "-n", "m2"}};
    ib.matveev_stage2 = matveev_coefficient(stage2);

    // n ln(alpha) - ln 2 < C2 (1+ln n)^2, so with n > 250,
    //   n / (ln n)^2 < (C2 + ln 2)/ln(alpha) * ((1+ln 250)/ln 250)^2 =: H.
    RealInterval ln2 = RealInterval::from_int(2, prec).ln();
    RealInterval ln250 = RealInterval::from_int(250, prec).ln();
    RealInterval fold = ln250.add_q(1) / ln250;
    ib.H = ((ib.matveev_stage2 + ln2) / ln_alpha) * fold.pow_int(2);
    ib.n_bound = resolve_n_bound(ib.r, ib.H);
    if (ib.n_bound <= 250)
        throw DomainError("absolute n bound came out <= 250; the n > 250 "
                          "case split would be vacuous");

    // Digit-count window: m1+m2 < n*ln(alpha)/ln 10 + 1, so the integer
    // m1+m2 is at most floor of that.
    RealInterval msum =
        (RealInterval::from_int(ib.n_bound, prec) * ln_alpha) / ln10;
    ib.m_sum_bound = msum.add_q(1).floor_upper();
    return ib;
}

}  // namespace narayana
