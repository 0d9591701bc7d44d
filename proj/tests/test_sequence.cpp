#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "narayana/sequence.hpp"

using namespace narayana;

TEST_CASE("initial terms and known values") {
    const long expected[] = {0, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88};
    for (size_t i = 0; i < sizeof(expected) / sizeof(expected[0]); ++i)
        CHECK(term(i) == expected[i]);
    CHECK(term(17) == 277);
    CHECK(term(50) == mpz_class("83316385"));
}

TEST_CASE("recurrence holds far out and growth is monotone") {
    mpz_class a = term(997), b = term(998), c = term(999), d = term(1000);
    CHECK(d == c + a);

    for (unsigned long n = 4; n < 200; ++n)
        CHECK(term(n + 1) > term(n));
}

TEST_CASE("matrix-power evaluation agrees with the rolling recurrence") {
    const mpz_class mods[] = {mpz_class(2), mpz_class(97),
                              mpz_class("1000000007"),
                              mpz_class("18446744073709551629")};
    for (const mpz_class& m : mods) {
        mpz_class w0 = 0 % m, w1 = 1 % m, w2 = 1 % m;
        for (unsigned long n = 0; n <= 10000; ++n) {
            if (n % 577 == 0 || n < 5)
                CHECK(term_mod_matrix(n, m) == w0);
            mpz_class next = (w2 + w0) % m;
            w0 = w1;
            w1 = w2;
            w2 = next;
        }
    }
    // Exact value check through the full-size modulus path.
    mpz_class big = term(300) + 1;
    CHECK(term_mod_matrix(300, big) == term(300));
}

TEST_CASE("Binet parameters: alpha, a, and the residual sign") {
    PrecisionBudget budget;
    BinetParams bp = binet_params(budget);
    CHECK(bp.alpha.lower_above(mpq_class(14, 10)));
    CHECK(bp.alpha.upper_below(mpq_class(15, 10)));
    CHECK(bp.a.lower_above(mpq_class(41, 100)));
    CHECK(bp.a.upper_below(mpq_class(42, 100)));
    CHECK(bp.bc_modulus.upper_below(mpq_class(1)));

    // a = alpha^2/(alpha^3 + 2) as intervals
    RealInterval lhs = bp.a;
    RealInterval rhs = (bp.alpha * bp.alpha) /
                       (bp.alpha * bp.alpha * bp.alpha).add_q(2);
    CHECK(lhs.intersects(rhs));

    // cached singletons agree with the bundle
    CHECK(cached_alpha(budget.working_bits).intersects(bp.alpha));
    CHECK(cached_a(budget.working_bits).intersects(bp.a));
    CHECK(cached_ln_alpha(budget.working_bits)
              .intersects(bp.alpha.ln()));
    CHECK(cached_ln10(budget.working_bits)
              .intersects(RealInterval::from_int(10, budget.working_bits).ln()));
}

TEST_CASE("residual |N(n) - a alpha^n| stays within its envelope") {
    PrecisionBudget budget;
    for (unsigned long n = 1; n <= 1000; n = (n < 40 ? n + 1 : n * 7 / 4))
        CHECK(residual_bound_check(n, budget));
}

TEST_CASE("dominant-root bounds alpha^(n-3) <= N(n) <= alpha^(n-1)") {
    PrecisionBudget budget;
    for (unsigned long n = 1; n <= 1000; n = (n < 40 ? n + 1 : n * 7 / 4))
        CHECK(dominant_bounds_check(n, budget));
}

TEST_CASE("index window for a given digit count") {
    PrecisionBudget budget;

    // Terms with exactly 2 digits: 13, 19, 28, 41, 60, 88 at n = 9..14.
    auto [lo2, hi2] = index_window(2, budget);
    CHECK(lo2 <= 9);
    CHECK(hi2 >= 14);
    CHECK(lo2 >= 7);
    CHECK(hi2 <= 14);

    // Terms with exactly 3 digits: 129..277..997 at n = 15..19.
    auto [lo3, hi3] = index_window(3, budget);
    CHECK(lo3 <= 15);
    CHECK(hi3 >= 19);

    // Window containment: every n with a total_digits-digit term lies inside.
    for (unsigned long digits = 2; digits <= 30; ++digits) {
        auto [wlo, whi] = index_window(digits, budget);
        mpz_class lo_val;
        mpz_ui_pow_ui(lo_val.get_mpz_t(), 10, digits - 1);
        mpz_class hi_val = lo_val * 10;
        for (long n = 4; n <= 220; ++n) {
            mpz_class v = term(n);
            if (v >= lo_val && v < hi_val) {
                CHECK(n >= wlo);
                CHECK(n <= whi);
            }
        }
    }
}
