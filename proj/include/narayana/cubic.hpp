// Certified root isolation for integer cubics with one real root and a
// complex-conjugate pair (negative discriminant).  The real root is bracketed
// by exact rational sign evaluations (bisection plus sign-checked Newton
// steps), so the returned enclosure is a proof artifact, not a numeric guess.
#pragma once

#include <gmpxx.h>

#include "narayana/interval.hpp"

namespace narayana {

// Enclosure of a conjugate pair beta, conj(beta), derived from the real root
// and the exact coefficient symmetric functions.
struct ComplexPairEnclosure {
    RealInterval real_part;
    RealInterval imag_part;  // imaginary part of the upper-half-plane member
    RealInterval modulus;    // |beta| = |conj(beta)|
};

struct CubicRoots {
    RealInterval real_root;
    ComplexPairEnclosure complex_pair;
};

// Isolates the roots of c3 x^3 + c2 x^2 + c1 x + c0.
// Requires c3 != 0 and discriminant < 0 (exactly one real root).
// The real-root enclosure has width <= 2^-(working_bits/2) and the cubic
// changes sign between its endpoints under exact rational evaluation.
CubicRoots isolate_cubic_roots(const mpz_class& c3, const mpz_class& c2,
                               const mpz_class& c1, const mpz_class& c0,
                               const PrecisionBudget& budget);

// Exact discriminant of the cubic (negative iff one real root + complex pair).
mpz_class cubic_discriminant(const mpz_class& c3, const mpz_class& c2,
                             const mpz_class& c1, const mpz_class& c0);

}  // namespace narayana
