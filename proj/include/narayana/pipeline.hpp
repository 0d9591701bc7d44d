#pragma once

// Orchestration: exhaustive low-range search, independent brute-force
// cross-check, the full proof run emitting a certificate, and the
// certificate auditor.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "narayana/baker.hpp"
#include "narayana/certificate.hpp"
#include "narayana/interval.hpp"
#include "narayana/reduction.hpp"

namespace narayana {

struct ProofConfig {
    long low_range_cutoff = 250;  // must cover all claimed solutions; >= 20
    PrecisionBudget budget;
    // Reference mode: run the reduction with M = 10^29 taken verbatim from
    // the source derivation instead of this run's own m_sum_bound.
    bool paper_constants = false;
    std::optional<mpz_class> M_override;  // raised to max(m_sum_bound, this)
    int jobs = 1;                         // stage-2 family loop parallelism

    void validate() const;  // throws DomainError on violation
};

// All n in [0, cutoff] whose term is a concatenation of two repdigits;
// exhaustive, exact, sorted by n.  Requires cutoff >= 20.
std::vector<SolutionRecord> low_range_search(long cutoff);

// Independent verification path: enumerate every pattern value with at most
// max_digits digits, intersect with the sequence terms below 10^max_digits,
// and compare against the decompose-based search over the same range.
// Returns true on agreement; throws DomainError with a detailed diff on
// mismatch.  Requires max_digits >= 2.
bool oracle_cross_check(long max_digits);

// Copy the analytic-bounds results (heights, Matveev coefficients, the
// resolver output, m_sum_bound) into a certificate, pairing each computed
// value with the reference value it is compared against.
void fill_initial_bounds(ProofCertificate& cert, const InitialBounds& ib);

// The full proof: low-range search, initial bounds, stage-1 and stage-2
// reduction, verdict.  Any certification failure yields verdict
// "inconclusive" with the failing stage named in the reason — never a
// silent fallback.
ProofCertificate prove(const ProofConfig& config);

// Re-check a certificate: schema, solution list against a fresh search,
// constant recomputation, convergent membership and determinant identities,
// epsilon re-evaluation at the recorded precision, bound arithmetic, and
// verdict logic.  Cheap relative to prove only in that nothing escalates
// past what the certificate already claims.
VerifyReport verify_certificate_json(const ordered_json& j);
VerifyReport verify_certificate(const std::string& path);

}  // namespace narayana
