#pragma once

// Proof certificate: a self-describing JSON document recording every bound
// and verdict of a run, so a referee can audit the proof without the tool.
// Every numeric value is serialized as a decimal string; certified upper
// bounds are rendered rounding up, certified lower bounds rounding down, so
// each string is itself a valid one-sided bound.

#include <string>
#include <vector>

#include <gmpxx.h>

#include <json.hpp>

#include "narayana/interval.hpp"
#include "narayana/repdigit.hpp"

namespace narayana {

using ordered_json = nlohmann::ordered_json;

struct SolutionRecord {
    long n = 0;
    mpz_class value;
    ConcatPattern pattern;

    bool operator==(const SolutionRecord&) const = default;
};

// One artifact-vs-reference constant comparison.
struct HeightRecord {
    std::string name;
    std::string value;        // certified bound computed by this tool
    std::string paper_value;  // the printed value it fails to reproduce
};

struct EpsRow {
    int d1 = 0;
    std::string eps;  // certified positive lower bound on epsilon(d1)
};

struct FamilyRow {
    int d1 = 0;
    int d2 = 0;
    long m1 = 0;
    mpz_class q;      // convergent denominator that certified this member
    std::string eps;  // certified positive lower bound
};

struct CertStage1 {
    mpz_class M;
    mpz_class q;
    std::vector<EpsRow> eps_table;
    std::string eps_min;
    long m1_bound = 0;  // inclusive: every solution has m1 <= m1_bound
};

struct CertStage2 {
    mpz_class M;
    std::vector<FamilyRow> families;
    std::string eps_min;
    long n_bound = 0;  // inclusive: every solution has n <= n_bound
};

struct ProofCertificate {
    // meta
    std::string version = "1.0.0";
    long precision_bits = 0;
    std::string timestamp;  // ISO-8601 UTC, the only non-deterministic field

    // low_range
    long cutoff = 0;
    std::vector<SolutionRecord> solutions;

    // initial_bounds
    std::vector<HeightRecord> heights;
    std::string matveev_stage1;
    std::string matveev_stage2;
    std::string paper_stage1;
    std::string paper_stage2;
    int gsl_r = 0;
    std::string gsl_H;
    mpz_class gsl_n_bound;
    std::string gsl_paper_n_bound;
    mpz_class m_sum_bound;

    // reduction
    CertStage1 stage1;
    CertStage2 stage2;

    // verdict
    bool closed = false;
    std::string reason;
};

ordered_json certificate_to_json(const ProofCertificate& cert);
ProofCertificate certificate_from_json(const ordered_json& j);

void save_certificate(const ProofCertificate& cert, const std::string& path);
ProofCertificate load_certificate(const std::string& path);

// Exact value of a decimal string like "13", "-2.41", "1.186632e+14".
// Throws DomainError on malformed input.
mpq_class parse_decimal(const std::string& s);

// Current time as ISO-8601 UTC ("2026-08-25T12:00:00Z").
std::string iso8601_utc_now();

// Accumulated result of a certificate audit.
struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string what);
};

}  // namespace narayana
