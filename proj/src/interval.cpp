#include "narayana/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace narayana {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t p) {
    return std::max<mpfr_prec_t>(p, 16);
}

}  // namespace

void PrecisionBudget::validate() const {
    if (working_bits < 2 || max_bits < 2)
        throw DomainError("precision budget: bit counts must be >= 2");
    if (working_bits > max_bits)
        throw DomainError("precision budget: working_bits must be <= max_bits");
    if (escalation_factor < 2)
        throw DomainError("precision budget: escalation_factor must be >= 2");
}

mpfr_prec_t PrecisionBudget::next(mpfr_prec_t current) const {
    if (current >= max_bits / escalation_factor)
        return max_bits;
    return current * escalation_factor;
}

void RealInterval::init(mpfr_prec_t prec) {
    prec = clamp_prec(prec);
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

void RealInterval::check() const {
    if (!mpfr_number_p(lo_) || !mpfr_number_p(hi_))
        throw std::logic_error("interval endpoint is not finite");
    if (mpfr_cmp(lo_, hi_) > 0)
        throw std::logic_error("interval endpoints out of order");
}

RealInterval::RealInterval() {
    init(16);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(long v, mpfr_prec_t prec) {
    init(std::max<mpfr_prec_t>(prec, 64));
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
    check();
}

RealInterval::RealInterval(const RealInterval& o) {
    init(std::max(mpfr_get_prec(o.lo_), mpfr_get_prec(o.hi_)));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
    init(16);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
        mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_int(const mpz_class& v, mpfr_prec_t prec) {
    RealInterval r;
    mpfr_set_prec(r.lo_, clamp_prec(prec));
    mpfr_set_prec(r.hi_, clamp_prec(prec));
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::from_rational(const mpq_class& v, mpfr_prec_t prec) {
    RealInterval r;
    mpfr_set_prec(r.lo_, clamp_prec(prec));
    mpfr_set_prec(r.hi_, clamp_prec(prec));
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                          mpfr_prec_t prec) {
    if (lo > hi)
        throw DomainError("from_endpoints: lo > hi");
    RealInterval r;
    mpfr_set_prec(r.lo_, clamp_prec(prec));
    mpfr_set_prec(r.hi_, clamp_prec(prec));
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    r.check();
    return r;
}

mpfr_prec_t RealInterval::prec() const {
    return std::max(mpfr_get_prec(lo_), mpfr_get_prec(hi_));
}

mpq_class RealInterval::lo_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

mpq_class RealInterval::hi_q() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

mpq_class RealInterval::width() const {
    return hi_q() - lo_q();
}

double RealInterval::width_d() const {
    return width().get_d();
}

bool RealInterval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RealInterval::contains(const mpz_class& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
}

bool RealInterval::contains(const RealInterval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool RealInterval::intersects(const RealInterval& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::is_positive() const {
    return mpfr_sgn(lo_) > 0;
}

bool RealInterval::is_negative() const {
    return mpfr_sgn(hi_) < 0;
}

bool RealInterval::upper_below(const mpq_class& v) const {
    return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0;
}

bool RealInterval::lower_above(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0;
}

bool RealInterval::certainly_less(const RealInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    RealInterval r;
    mpfr_set_prec(r.lo_, p);
    mpfr_set_prec(r.hi_, p);
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    RealInterval r;
    mpfr_set_prec(r.lo_, p);
    mpfr_set_prec(r.hi_, p);
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    r.check();
    return r;
}

// Shared min/max-over-endpoint-pairs kernel for * and /.
RealInterval interval_binop_minmax(const RealInterval& a, const RealInterval& b,
                                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr,
                                             mpfr_rnd_t)) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    RealInterval r;
    mpfr_set_prec(r.lo_, p);
    mpfr_set_prec(r.hi_, p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    const mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            op(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0)
                mpfr_set(r.lo_, t, MPFR_RNDD);
            op(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0)
                mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    r.check();
    return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    return interval_binop_minmax(a, b, mpfr_mul);
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero())
        throw DomainError("interval division by an interval containing zero");
    return interval_binop_minmax(a, b, mpfr_div);
}

RealInterval RealInterval::operator-() const {
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::add_q(const mpq_class& v) const {
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    mpfr_add_q(r.lo_, lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_, hi_, v.get_mpq_t(), MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::mul_z(const mpz_class& v) const {
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    if (sgn(v) >= 0) {
        mpfr_mul_z(r.lo_, lo_, v.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, hi_, v.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_, hi_, v.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_, lo_, v.get_mpz_t(), MPFR_RNDU);
    }
    r.check();
    return r;
}

RealInterval RealInterval::abs() const {
    if (mpfr_sgn(lo_) >= 0)
        return *this;
    if (mpfr_sgn(hi_) <= 0)
        return -*this;
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(r.hi_, hi_) < 0)
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0)
        throw DomainError("sqrt of an interval with negative lower endpoint");
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::ln() const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("log of an interval with non-positive lower endpoint");
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

RealInterval RealInterval::pow_int(long e) const {
    if (mpfr_sgn(lo_) <= 0)
        throw DomainError("pow_int requires a certainly-positive base");
    RealInterval r;
    mpfr_set_prec(r.lo_, prec());
    mpfr_set_prec(r.hi_, prec());
    if (e >= 0) {  // increasing in the base
        mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
    } else {  // decreasing in the base
        mpfr_pow_si(r.lo_, hi_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, lo_, e, MPFR_RNDU);
    }
    r.check();
    return r;
}

mpz_class RealInterval::floor_lower() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

mpz_class RealInterval::floor_upper() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

mpz_class RealInterval::ceil_upper() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
    return z;
}

mpz_class RealInterval::round_nearest_mid() const {
    mpfr_t mid;
    mpfr_init2(mid, prec() + 2);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return z;
}

namespace {

std::string format_endpoint(const mpfr_t x, int sig_digits, mpfr_rnd_t rnd) {
    if (sig_digits < 2)
        sig_digits = 2;
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dR*e", sig_digits - 1);
    std::vector<char> buf(static_cast<size_t>(sig_digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, rnd, x);
    return std::string(buf.data());
}

}  // namespace

std::string RealInterval::dec_lower(int sig_digits) const {
    return format_endpoint(lo_, sig_digits, MPFR_RNDD);
}

std::string RealInterval::dec_upper(int sig_digits) const {
    return format_endpoint(hi_, sig_digits, MPFR_RNDU);
}

std::string RealInterval::str(int sig_digits) const {
    return "[" + dec_lower(sig_digits) + ", " + dec_upper(sig_digits) + "]";
}

RealInterval refine(const IntervalRecipe& recipe, const mpq_class& target_width,
                    const PrecisionBudget& budget) {
    budget.validate();
    mpfr_prec_t prec = budget.working_bits;
    for (;;) {
        RealInterval v = recipe(prec);
        if (v.width() <= target_width)
            return v;
        if (prec >= budget.max_bits)
            throw EscalationError("refine: target width not reached at max precision",
                                  std::move(v));
        prec = budget.next(prec);
    }
}

bool decide(const std::function<std::optional<bool>(mpfr_prec_t)>& judge,
            const PrecisionBudget& budget, const std::string& what) {
    budget.validate();
    mpfr_prec_t prec = budget.working_bits;
    for (;;) {
        std::optional<bool> verdict;
        try {
            verdict = judge(prec);
        } catch (const AmbiguityError&) {
            verdict = std::nullopt;  // too wide at this precision: escalate
        }
        if (verdict.has_value())
            return *verdict;
        if (prec >= budget.max_bits)
            throw EscalationError("undecided at max precision: " + what);
        prec = budget.next(prec);
    }
}

RealInterval dist_to_nearest_int(const RealInterval& x) {
    static const mpq_class quarter(1, 4);
    static const mpq_class half(1, 2);
    if (x.width() >= quarter)
        throw AmbiguityError("dist_to_nearest_int: interval width >= 1/4");

    // Recentre near 0 exactly in rational arithmetic; distance-to-nearest-
    // integer is 1-periodic, so only the fractional placement matters.
    mpz_class n = x.round_nearest_mid();
    mpq_class c = x.lo_q() - mpq_class(n);
    mpq_class d = x.hi_q() - mpq_class(n);
    // Here -3/4 < c <= d < 3/4, and d - c < 1/4: the interval covers at most
    // one kink of the piecewise-linear distance function (0 or +-1/2).
    mpq_class out_lo, out_hi;
    if (c >= 0) {
        if (d <= half) {  // monotone rising stretch
            out_lo = c;
            out_hi = d;
        } else {  // straddles the half-integer peak: conservative hull
            out_lo = std::min(c, mpq_class(1 - d));
            out_hi = half;
        }
    } else if (d <= 0) {
        if (c >= -half) {
            out_lo = -d;
            out_hi = -c;
        } else {
            out_lo = std::min(mpq_class(-d), mpq_class(1 + c));
            out_hi = half;
        }
    } else {  // straddles an integer: minimum distance 0
        out_lo = 0;
        out_hi = std::max(mpq_class(-c), d);
    }
    return RealInterval::from_endpoints(out_lo, out_hi, x.prec());
}

}  // namespace narayana
