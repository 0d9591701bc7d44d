#pragma once

// Model for integers that are a concatenation of two repdigit blocks in
// base 10: m1 copies of digit d1 followed by m2 copies of digit d2.
// Pure repdigits (d1 == d2) are admitted; the search space is the full
// d1 in 1..9, d2 in 0..9, m1,m2 >= 1 so that the canonical solution set
// {13, 19, 28, 41, 60, 88, 277} is representable.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace narayana {

struct ConcatPattern {
    int d1 = 1;   // leading block digit, 1..9 (no leading zeros)
    long m1 = 1;  // leading block length, >= 1
    int d2 = 0;   // trailing block digit, 0..9
    long m2 = 1;  // trailing block length, >= 1

    bool operator==(const ConcatPattern&) const = default;
};

// Exact value of a pattern: (d1*10^(m1+m2) - (d1-d2)*10^m2 - d2) / 9.
// The division by 9 is always exact; throws DomainError if the pattern
// violates the digit/length invariants above.
mpz_class pattern_value(const ConcatPattern& p);

// Digit-run decomposition. Returns the canonical pattern when the decimal
// string of n has at most two maximal runs of equal digits and length >= 2;
// a single run of length L maps to (d, L-1, d, 1). Returns nothing for
// single-digit values or three or more runs. Requires n >= 0.
std::optional<ConcatPattern> decompose(const mpz_class& n);

// Enumerate every admissible pattern with m1+m2 <= max_total_digits exactly
// once, together with its value, grouped by total digit count (ascending).
// Requires max_total_digits >= 2. The enumeration is a pure function of its
// argument; independent enumerations may run concurrently.
void enumerate_values(
    long max_total_digits,
    const std::function<void(const ConcatPattern&, const mpz_class&)>& emit);

// Convenience form collecting the stream into a vector.
std::vector<std::pair<ConcatPattern, mpz_class>> enumerate_values(
    long max_total_digits);

}  // namespace narayana
