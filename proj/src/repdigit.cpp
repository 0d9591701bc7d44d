#include "narayana/repdigit.hpp"

#include <string>

#include "narayana/interval.hpp"

namespace narayana {

namespace {

void check_pattern(const ConcatPattern& p) {
    if (p.d1 < 1 || p.d1 > 9)
        throw DomainError("pattern leading digit must be in 1..9");
    if (p.d2 < 0 || p.d2 > 9)
        throw DomainError("pattern trailing digit must be in 0..9");
    if (p.m1 < 1 || p.m2 < 1)
        throw DomainError("pattern block lengths must be >= 1");
}

}  // namespace

mpz_class pattern_value(const ConcatPattern& p) {
    check_pattern(p);
    mpz_class pow_m2, pow_total;
    mpz_ui_pow_ui(pow_m2.get_mpz_t(), 10,
                  static_cast<unsigned long>(p.m2));
    mpz_ui_pow_ui(pow_total.get_mpz_t(), 10,
                  static_cast<unsigned long>(p.m1 + p.m2));
    mpz_class num = p.d1 * pow_total - (p.d1 - p.d2) * pow_m2 - p.d2;
    // num = 9 * value holds identically; keep the exactness check as a
    // cheap guard against overflow bugs in the exponent handling.
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 9))
        throw DomainError("pattern numerator not divisible by 9");
    mpz_class value;
    mpz_divexact_ui(value.get_mpz_t(), num.get_mpz_t(), 9);
    return value;
}

std::optional<ConcatPattern> decompose(const mpz_class& n) {
    if (n < 0)
        throw DomainError("decompose requires a nonnegative integer");
    if (n < 10)
        return std::nullopt;  // single decimal digit
    std::string s = n.get_str();
    // Collect maximal runs of equal digits; bail out past two.
    struct Run {
        char digit;
        long length;
    };
    Run runs[2] = {{s[0], 0}, {0, 0}};
    int run_count = 1;
    for (char c : s) {
        if (c == runs[run_count - 1].digit) {
            ++runs[run_count - 1].length;
        } else {
            if (run_count == 2)
                return std::nullopt;
            runs[run_count] = {c, 1};
            ++run_count;
        }
    }
    if (run_count == 2)
        return ConcatPattern{runs[0].digit - '0', runs[0].length,
                             runs[1].digit - '0', runs[1].length};
    // Pure repdigit of length L >= 2: canonical split (L-1, 1).
    int d = runs[0].digit - '0';
    return ConcatPattern{d, runs[0].length - 1, d, 1};
}

void enumerate_values(
    long max_total_digits,
    const std::function<void(const ConcatPattern&, const mpz_class&)>& emit) {
    if (max_total_digits < 2)
        throw DomainError("enumeration needs max_total_digits >= 2");
    for (long total = 2; total <= max_total_digits; ++total) {
        for (long m1 = 1; m1 < total; ++m1) {
            const long m2 = total - m1;
            for (int d1 = 1; d1 <= 9; ++d1) {
                for (int d2 = 0; d2 <= 9; ++d2) {
                    ConcatPattern p{d1, m1, d2, m2};
                    emit(p, pattern_value(p));
                }
            }
        }
    }
}

std::vector<std::pair<ConcatPattern, mpz_class>> enumerate_values(
    long max_total_digits) {
    std::vector<std::pair<ConcatPattern, mpz_class>> out;
    enumerate_values(max_total_digits,
                     [&](const ConcatPattern& p, const mpz_class& v) {
                         out.emplace_back(p, v);
                     });
    return out;
}

}  // namespace narayana
