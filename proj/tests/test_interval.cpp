#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "narayana/interval.hpp"

using namespace narayana;

namespace {

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("construction and exact endpoint recovery") {
    RealInterval x = RealInterval::from_rational(mpq_class(1, 3), 64);
    CHECK(x.lo_q() <= mpq_class(1, 3));
    CHECK(x.hi_q() >= mpq_class(1, 3));
    CHECK(x.contains(mpq_class(1, 3)));
    CHECK(x.width() > 0);          // 1/3 is not dyadic
    CHECK(x.width() < mpq_class(1, mpz_class(1) << 60));

    // Dyadic rationals are represented exactly.
    RealInterval d = RealInterval::from_rational(mpq_class(5, 8), 64);
    CHECK(d.lo_q() == mpq_class(5, 8));
    CHECK(d.hi_q() == mpq_class(5, 8));
    CHECK(d.width() == 0);

    RealInterval i = RealInterval::from_int(mpz_class("123456789123456789"), 128);
    CHECK(i.lo_q() == mpq_class("123456789123456789"));
    CHECK(i.width() == 0);

    CHECK_THROWS_AS(RealInterval::from_endpoints(mpq_class(2), mpq_class(1), 64),
                    DomainError);
}

TEST_CASE("arithmetic encloses the exact rational result") {
    std::mt19937_64 rng(20240915);
    for (int iter = 0; iter < 1000; ++iter) {
        mpq_class a = random_rational(rng);
        mpq_class b = random_rational(rng);
        RealInterval ia = RealInterval::from_rational(a, 64);
        RealInterval ib = RealInterval::from_rational(b, 64);

        CHECK((ia + ib).contains(mpq_class(a + b)));
        CHECK((ia - ib).contains(mpq_class(a - b)));
        CHECK((ia * ib).contains(mpq_class(a * b)));
        if (b != 0 && !ib.contains_zero())
            CHECK((ia / ib).contains(mpq_class(a / b)));
        CHECK((-ia).contains(mpq_class(-a)));
        CHECK(ia.abs().contains(mpq_class(::abs(a))));
        CHECK(ia.add_q(b).contains(mpq_class(a + b)));
        CHECK(ia.mul_z(mpz_class(7)).contains(mpq_class(a * 7)));
    }
}

TEST_CASE("division by an interval containing zero is rejected") {
    RealInterval num = RealInterval::from_rational(mpq_class(1), 64);
    RealInterval den =
        RealInterval::from_endpoints(mpq_class(-1, 4), mpq_class(1, 4), 64);
    CHECK_THROWS_AS(num / den, DomainError);
}

TEST_CASE("domain guards on sqrt, ln, pow_int") {
    RealInterval neg =
        RealInterval::from_endpoints(mpq_class(-2), mpq_class(-1), 64);
    CHECK_THROWS_AS(neg.sqrt(), DomainError);
    RealInterval zero_straddle =
        RealInterval::from_endpoints(mpq_class(-1), mpq_class(1), 64);
    CHECK_THROWS_AS(zero_straddle.ln(), DomainError);
    CHECK_THROWS_AS(zero_straddle.pow_int(-2), DomainError);

    RealInterval four = RealInterval::from_rational(mpq_class(4), 64);
    CHECK(four.sqrt().contains(mpq_class(2)));
    RealInterval two = RealInterval::from_rational(mpq_class(2), 128);
    // ln 2 = 0.6931471805599453094...
    CHECK(two.ln().lo_q() > mpq_class("6931471805599453093/10000000000000000000"));
    CHECK(two.ln().hi_q() < mpq_class("6931471805599453095/10000000000000000000"));
    CHECK(two.pow_int(10).contains(mpq_class(1024)));
    CHECK(two.pow_int(-2).contains(mpq_class(1, 4)));
    CHECK(two.pow_int(0).contains(mpq_class(1)));
}

TEST_CASE("integer extraction") {
    RealInterval x =
        RealInterval::from_endpoints(mpq_class(7, 2), mpq_class(15, 4), 64);
    CHECK(x.floor_lower() == 3);
    CHECK(x.floor_upper() == 3);
    CHECK(x.ceil_upper() == 4);

    RealInterval tight =
        RealInterval::from_endpoints(mpq_class(41, 10), mpq_class(42, 10), 64);
    CHECK(tight.round_nearest_mid() == 4);

    RealInterval negx =
        RealInterval::from_endpoints(mpq_class(-5, 2), mpq_class(-9, 4), 64);
    CHECK(negx.floor_lower() == -3);
    CHECK(negx.ceil_upper() == -2);
}

TEST_CASE("comparisons") {
    RealInterval a =
        RealInterval::from_endpoints(mpq_class(1), mpq_class(2), 64);
    RealInterval b =
        RealInterval::from_endpoints(mpq_class(3), mpq_class(4), 64);
    CHECK(a.certainly_less(b));
    CHECK(!b.certainly_less(a));
    CHECK(!a.intersects(b));
    CHECK(a.upper_below(mpq_class(5, 2)));
    CHECK(a.lower_above(mpq_class(1, 2)));
    CHECK(a.is_positive());
    CHECK((-b).is_negative());
    RealInterval hull =
        RealInterval::from_endpoints(mpq_class(0), mpq_class(5), 64);
    CHECK(hull.contains(a));
    CHECK(!a.contains(hull));
}

TEST_CASE("refine shrinks an interval recipe to the requested width") {
    // 1/3 at increasing precision: width halves (at least) per extra bit.
    IntervalRecipe third = [](mpfr_prec_t prec) {
        return RealInterval::from_rational(mpq_class(1, 3), prec);
    };
    PrecisionBudget budget;
    mpq_class target(1, mpz_class(1) << 200);
    RealInterval r = refine(third, target, budget);
    CHECK(r.width() <= target);
    CHECK(r.contains(mpq_class(1, 3)));

    // Nested refinement: higher precision stays inside lower precision.
    RealInterval coarse = third(64);
    RealInterval fine = third(256);
    CHECK(coarse.contains(fine));
}

TEST_CASE("refine escalates and fails honestly when the budget is too small") {
    IntervalRecipe third = [](mpfr_prec_t prec) {
        return RealInterval::from_rational(mpq_class(1, 3), prec);
    };
    PrecisionBudget tiny;
    tiny.working_bits = 16;
    tiny.max_bits = 32;
    mpq_class impossible(1, mpz_class(1) << 128);
    CHECK_THROWS_AS(refine(third, impossible, tiny), EscalationError);
}

TEST_CASE("decide escalates through undecided answers") {
    PrecisionBudget budget;
    budget.working_bits = 16;
    budget.max_bits = 1024;
    int calls = 0;
    bool verdict = decide(
        [&calls](mpfr_prec_t prec) -> std::optional<bool> {
            ++calls;
            if (prec < 100)
                return std::nullopt;
            return true;
        },
        budget, "needs 100 bits");
    CHECK(verdict);
    CHECK(calls > 1);

    PrecisionBudget capped;
    capped.working_bits = 16;
    capped.max_bits = 64;
    CHECK_THROWS_AS(decide([](mpfr_prec_t) { return std::nullopt; }, capped,
                           "never decides"),
                    EscalationError);
}

TEST_CASE("distance to nearest integer") {
    RealInterval half = RealInterval::from_rational(mpq_class(1, 2), 64);
    RealInterval d1 = dist_to_nearest_int(half);
    CHECK(d1.lo_q() == mpq_class(1, 2));
    CHECK(d1.hi_q() == mpq_class(1, 2));

    RealInterval x = RealInterval::from_rational(mpq_class(13, 4), 64);
    RealInterval d2 = dist_to_nearest_int(x);
    CHECK(d2.lo_q() == mpq_class(1, 4));
    CHECK(d2.hi_q() == mpq_class(1, 4));

    // A wide interval cannot be assigned a single nearest integer.
    RealInterval wide =
        RealInterval::from_endpoints(mpq_class(0), mpq_class(1), 64);
    CHECK_THROWS_AS(dist_to_nearest_int(wide), AmbiguityError);

    // Straddling a half-integer: the distance hull stays sound.
    RealInterval straddle = RealInterval::from_endpoints(
        mpq_class(1, 2) - mpq_class(1, 64), mpq_class(1, 2) + mpq_class(1, 64),
        64);
    RealInterval d3 = dist_to_nearest_int(straddle);
    CHECK(d3.lo_q() <= mpq_class(1, 2) - mpq_class(1, 64));
    CHECK(d3.hi_q() >= mpq_class(1, 2));

    // Exact values near an integer.
    RealInterval near3 = RealInterval::from_rational(
        mpq_class(3) + mpq_class(1, 1024), 64);
    RealInterval d4 = dist_to_nearest_int(near3);
    CHECK(d4.contains(mpq_class(1, 1024)));
}

TEST_CASE("decimal rendering brackets the interval") {
    RealInterval x = RealInterval::from_rational(mpq_class(1, 3), 128);
    std::string lo = x.dec_lower(20);
    std::string hi = x.dec_upper(20);
    CHECK(lo.substr(0, 6) == "3.3333");
    CHECK(hi.substr(0, 6) == "3.3333");
    CHECK(lo <= hi);  // same exponent, digit strings comparable

    RealInterval big = RealInterval::from_int(mpz_class("98765432109876543210"), 128);
    CHECK(big.dec_upper(10).find("e+19") != std::string::npos);
}

TEST_CASE("precision budget validation") {
    PrecisionBudget bad;
    bad.working_bits = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    PrecisionBudget inverted;
    inverted.working_bits = 256;
    inverted.max_bits = 128;
    CHECK_THROWS_AS(inverted.validate(), DomainError);
    PrecisionBudget good;
    CHECK_NOTHROW(good.validate());
    CHECK(good.next(good.working_bits) > good.working_bits);
}
