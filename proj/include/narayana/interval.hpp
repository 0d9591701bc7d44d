// Certified real arithmetic: intervals with dyadic-rational endpoints and
// outward (directed) rounding.  Every operation returns an enclosure that is
// guaranteed to contain the exact mathematical result.  Endpoints are MPFR
// numbers, which are exactly mantissa * 2^exponent, so rounding direction is
// exact and results are reproducible across platforms.
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace narayana {

// An operand lies outside an operation's mathematical domain.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An interval is too wide to answer the question asked of it; the caller
// must refine the input first.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Controls how far automatic precision escalation may go.
struct PrecisionBudget {
    mpfr_prec_t working_bits = 256;
    mpfr_prec_t max_bits = 16384;
    int escalation_factor = 2;

    void validate() const;
    // Next precision on the escalation ladder (clamped to max_bits).
    mpfr_prec_t next(mpfr_prec_t current) const;
};

class RealInterval {
  public:
    RealInterval();                                   // [0, 0]
    explicit RealInterval(long v, mpfr_prec_t prec = 64);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(const RealInterval& o);
    RealInterval& operator=(RealInterval&& o) noexcept;
    ~RealInterval();

    static RealInterval from_int(const mpz_class& v, mpfr_prec_t prec);
    static RealInterval from_rational(const mpq_class& v, mpfr_prec_t prec);
    // Outward-rounded enclosure of [lo, hi]; requires lo <= hi.
    static RealInterval from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                       mpfr_prec_t prec);

    mpfr_prec_t prec() const;
    mpq_class lo_q() const;   // exact: endpoints are dyadic rationals
    mpq_class hi_q() const;
    mpq_class width() const;  // exact hi - lo
    double width_d() const;

    bool contains(const mpq_class& v) const;
    bool contains(const mpz_class& v) const;
    bool contains(const RealInterval& o) const;  // o is a subset of *this
    bool intersects(const RealInterval& o) const;
    bool contains_zero() const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    bool upper_below(const mpq_class& v) const;        // hi < v
    bool lower_above(const mpq_class& v) const;        // lo > v
    bool certainly_less(const RealInterval& o) const;  // hi < o.lo

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
    RealInterval operator-() const;

    RealInterval add_q(const mpq_class& v) const;
    RealInterval mul_z(const mpz_class& v) const;
    RealInterval abs() const;
    RealInterval sqrt() const;         // requires lo >= 0
    RealInterval ln() const;           // requires lo > 0
    RealInterval pow_int(long e) const;  // requires lo > 0

    mpz_class floor_lower() const;       // floor(lo)
    mpz_class floor_upper() const;       // floor(hi)
    mpz_class ceil_upper() const;        // ceil(hi)
    mpz_class round_nearest_mid() const; // nearest integer to the midpoint

    // Decimal renderings; "lower" rounds toward -inf, "upper" toward +inf,
    // so each string is itself a valid one-sided bound.
    std::string dec_lower(int sig_digits) const;
    std::string dec_upper(int sig_digits) const;
    std::string str(int sig_digits = 20) const;  // "[lo, hi]" diagnostic form

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

  private:
    mpfr_t lo_;
    mpfr_t hi_;

    void init(mpfr_prec_t prec);
    void check() const;  // lo <= hi and both finite
    friend RealInterval interval_binop_minmax(const RealInterval&, const RealInterval&,
                                              int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr,
                                                        mpfr_rnd_t));
};

// Raised when the precision ladder is exhausted; carries the best enclosure
// achieved so far when one exists.
struct EscalationError : std::runtime_error {
    std::optional<RealInterval> best;

    explicit EscalationError(const std::string& msg) : std::runtime_error(msg) {}
    EscalationError(const std::string& msg, RealInterval b)
        : std::runtime_error(msg), best(std::move(b)) {}
};

// A recomputable quantity: evaluates a fresh enclosure at the given precision.
using IntervalRecipe = std::function<RealInterval(mpfr_prec_t)>;

// Re-evaluates `recipe` at geometrically escalating precision until the
// enclosure is no wider than `target_width`.
RealInterval refine(const IntervalRecipe& recipe, const mpq_class& target_width,
                    const PrecisionBudget& budget);

// Certified yes/no decision: `judge` returns nullopt while the enclosures at
// the current precision cannot decide, true/false once certified.
bool decide(const std::function<std::optional<bool>(mpfr_prec_t)>& judge,
            const PrecisionBudget& budget, const std::string& what);

// Enclosure of the distance from x to the nearest integer.  Requires
// width < 1/4 (otherwise the nearest integer is ambiguous); when the input
// straddles an integer or half-integer, returns the conservative hull.
RealInterval dist_to_nearest_int(const RealInterval& x);

}  // namespace narayana
