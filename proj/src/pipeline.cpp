#include "narayana/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "narayana/repdigit.hpp"
#include "narayana/sequence.hpp"

namespace narayana {

namespace {

mpz_class pow10_z(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

mpz_class next_power_of_ten(const mpz_class& x) {
    mpz_class m = 1;
    while (m < x)
        m *= 10;
    return m;
}

bool is_power_of_ten(const mpz_class& x) {
    if (x < 1)
        return false;
    mpz_class m = x;
    while (m % 10 == 0)
        m /= 10;
    return m == 1;
}

// Round the certified lower endpoint down: the string itself is a valid
// positive lower bound on epsilon.
std::string eps_string(const RealInterval& eps) { return eps.dec_lower(30); }

// Round the certified upper endpoint up: a valid upper bound.
std::string upper_string(const RealInterval& v) { return v.dec_upper(25); }

constexpr int kMaxExtraQuotients = 96;

}  // namespace

void fill_initial_bounds(ProofCertificate& cert, const InitialBounds& ib) {
    cert.heights = {
        {"h_eta1_step1", upper_string(ib.h_eta1_step1.value), "2.41"},
        {"A1_step1", upper_string(ib.A1_step1), "7.23"},
        {"m1_log10_coeff", upper_string(ib.m1_coeff), "7.0e12"},
        {"h_eta1_step2_coeff", upper_string(ib.h_eta1_step2.value), "7.1e12"},
    };
    cert.matveev_stage1 = upper_string(ib.matveev_stage1);
    cert.matveev_stage2 = upper_string(ib.matveev_stage2);
    cert.paper_stage1 = "6.9e12";
    cert.paper_stage2 = "2.0e25";
    cert.gsl_r = ib.r;
    cert.gsl_H = upper_string(ib.H);
    cert.gsl_n_bound = ib.n_bound;
    cert.gsl_paper_n_bound = "2.15e29";
    cert.m_sum_bound = ib.m_sum_bound;
}

void ProofConfig::validate() const {
    if (low_range_cutoff < 20)
        throw DomainError("low-range cutoff must cover all claimed "
                          "solutions (>= 20)");
    budget.validate();
    if (jobs < 1)
        throw DomainError("jobs must be >= 1");
    if (M_override && *M_override < 1)
        throw DomainError("M override must be >= 1");
}

std::vector<SolutionRecord> low_range_search(long cutoff) {
    if (cutoff < 20)
        throw DomainError("low-range cutoff must cover all claimed "
                          "solutions (>= 20)");
    std::vector<SolutionRecord> out;
    mpz_class w0 = 0, w1 = 1, w2 = 1;  // N(n), N(n+1), N(n+2)
    for (long n = 0; n <= cutoff; ++n) {
        if (std::optional<ConcatPattern> p = decompose(w0))
            out.push_back(SolutionRecord{n, w0, *p});
        mpz_class next = w2 + w0;
        w0 = w1;
        w1 = w2;
        w2 = next;
    }
    return out;
}

bool oracle_cross_check(long max_digits) {
    if (max_digits < 2)
        throw DomainError("oracle needs max_digits >= 2");
    const mpz_class limit = pow10_z(max_digits);

    // Path 1: construct every pattern value, no digit scanning involved.
    std::set<mpz_class> pattern_values;
    enumerate_values(max_digits,
                     [&](const ConcatPattern&, const mpz_class& v) {
                         pattern_values.insert(v);
                     });

    // Path 2: walk the sequence, decompose each term.
    std::set<mpz_class> term_values;
    std::set<mpz_class> via_decompose;
    mpz_class w0 = 0, w1 = 1, w2 = 1;
    while (w0 < limit) {
        term_values.insert(w0);
        if (decompose(w0))
            via_decompose.insert(w0);
        mpz_class next = w2 + w0;
        w0 = w1;
        w1 = w2;
        w2 = next;
    }

    std::set<mpz_class> intersection;
    std::set_intersection(pattern_values.begin(), pattern_values.end(),
                          term_values.begin(), term_values.end(),
                          std::inserter(intersection, intersection.end()));
    if (intersection == via_decompose)
        return true;

    std::string diff = "oracle mismatch:";
    for (const mpz_class& v : intersection)
        if (!via_decompose.count(v))
            diff += " enumerate-only:" + v.get_str();
    for (const mpz_class& v : via_decompose)
        if (!intersection.count(v))
            diff += " decompose-only:" + v.get_str();
    throw DomainError(diff);
}

ProofCertificate prove(const ProofConfig& config) {
    config.validate();
    ProofCertificate cert;
    cert.precision_bits = config.budget.working_bits;
    cert.timestamp = iso8601_utc_now();
    cert.cutoff = config.low_range_cutoff;
    cert.solutions = low_range_search(config.low_range_cutoff);

    auto inconclusive = [&cert](const std::string& stage,
                                const std::string& what) -> ProofCertificate {
        cert.closed = false;
        cert.reason =
            "inconclusive: certification failed during " + stage + ": " + what;
        return cert;
    };

    InitialBounds ib;
    try {
        ib = initial_bounds(config.budget);
    } catch (const EscalationError& e) {
        return inconclusive("initial-bounds computation", e.what());
    } catch (const AmbiguityError& e) {
        return inconclusive("initial-bounds computation", e.what());
    }
    fill_initial_bounds(cert, ib);

    mpz_class M;
    if (config.paper_constants) {
        M = pow10_z(29);  // the reference derivation's choice
    } else {
        mpz_class target = ib.m_sum_bound;
        if (config.M_override && *config.M_override > target)
            target = *config.M_override;
        M = next_power_of_ten(target);
    }

    IntervalRecipe tau = tau_recipe();
    ContinuedFraction cf;
    int extra = 16;
    try {
        cf = expand_cf(tau, 6 * M, config.budget, extra);
    } catch (const EscalationError& e) {
        return inconclusive("continued-fraction expansion", e.what());
    }
    const size_t k0 = *cf.first_q_above(6 * M);

    // Stage 1: one q serves all nine d1; if any member fails to certify a
    // positive epsilon, the whole family retries with the next convergent.
    CertStage1 s1;
    s1.M = M;
    try {
        bool done = false;
        while (!done) {
            for (size_t k = k0; k < cf.convergents.size() && !done; ++k) {
                const mpz_class& q = cf.convergents[k].second;
                std::vector<RealInterval> eps_by_d1;
                bool all_ok = true;
                for (int d1 = 1; d1 <= 9; ++d1) {
                    std::optional<RealInterval> e =
                        epsilon(stage1_instance(d1, M), q, config.budget);
                    if (!e) {
                        all_ok = false;
                        break;
                    }
                    eps_by_d1.push_back(std::move(*e));
                }
                if (!all_ok)
                    continue;
                s1.q = q;
                s1.eps_table.clear();
                long worst = 1;  // the k >= K exclusion says nothing below 1
                mpq_class min_lo;
                for (int d1 = 1; d1 <= 9; ++d1) {
                    const RealInterval& e = eps_by_d1[d1 - 1];
                    long K = reduced_bound(stage1_instance(d1, M), q, e,
                                           config.budget);
                    worst = std::max(worst, K - 1);
                    s1.eps_table.push_back(EpsRow{d1, eps_string(e)});
                    mpq_class lo = e.lo_q();
                    if (d1 == 1 || lo < min_lo) {
                        min_lo = lo;
                        s1.eps_min = s1.eps_table.back().eps;
                    }
                }
                s1.m1_bound = worst;
                done = true;
            }
            if (!done) {
                if (extra >= kMaxExtraQuotients)
                    throw EscalationError(
                        "no convergent certified a positive epsilon for "
                        "every d1");
                extra += 16;
                cf = expand_cf(tau, 6 * M, config.budget, extra);
            }
        }
    } catch (const EscalationError& e) {
        return inconclusive("stage-1 reduction", e.what());
    } catch (const AmbiguityError& e) {
        return inconclusive("stage-1 reduction", e.what());
    }
    cert.stage1 = s1;

    // Stage 2: every (d1, d2, m1 <= stage-1 bound), each member retried
    // individually with later convergents when its epsilon fails.
    CertStage2 s2;
    s2.M = M;
    try {
        struct Member {
            int d1;
            int d2;
            long m1;
        };
        std::vector<Member> members;
        members.reserve(90 * static_cast<size_t>(s1.m1_bound));
        for (int d1 = 1; d1 <= 9; ++d1)
            for (int d2 = 0; d2 <= 9; ++d2)
                for (long m1 = 1; m1 <= s1.m1_bound; ++m1)
                    members.push_back(Member{d1, d2, m1});

        struct MemberResult {
            FamilyRow row;
            mpq_class eps_lo;
            long bound = 0;
            bool need_more_cf = false;
        };
        std::vector<MemberResult> results(members.size());

        auto run_member = [&](size_t idx) {
            const Member& m = members[idx];
            ReductionInstance inst = stage2_instance(m.d1, m.d2, m.m1, M);
            MemberResult r;
            for (size_t k = k0; k < cf.convergents.size(); ++k) {
                const mpz_class& q = cf.convergents[k].second;
                std::optional<RealInterval> e = epsilon(inst, q, config.budget);
                if (!e)
                    continue;
                long K = reduced_bound(inst, q, *e, config.budget);
                r.row = FamilyRow{m.d1, m.d2, m.m1, q, eps_string(*e)};
                r.eps_lo = e->lo_q();
                r.bound = K - 1;
                results[idx] = std::move(r);
                return;
            }
            r.need_more_cf = true;
            results[idx] = std::move(r);
        };

        const int jobs = static_cast<int>(std::min<size_t>(
            static_cast<size_t>(config.jobs), members.size()));
        if (jobs <= 1) {
            for (size_t i = 0; i < members.size(); ++i)
                run_member(i);
        } else {
            std::atomic<size_t> next_idx{0};
            std::exception_ptr first_error;
            std::mutex err_mu;
            auto work = [&]() {
                for (;;) {
                    size_t idx = next_idx.fetch_add(1);
                    if (idx >= members.size())
                        return;
                    try {
                        run_member(idx);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(jobs));
            for (int t = 0; t < jobs; ++t)
                pool.emplace_back(work);
            for (std::thread& t : pool)
                t.join();
            if (first_error)
                std::rethrow_exception(first_error);
            for (const MemberResult& r : results)
                if (r.bound == 0 && !r.need_more_cf && r.row.q == 0)
                    throw EscalationError("stage-2 member left unprocessed");
        }

        // Members whose retries ran off the end of the table: extend the
        // expansion (serially; the table is shared) and rerun them.
        for (size_t i = 0; i < members.size(); ++i) {
            while (results[i].need_more_cf) {
                if (extra >= kMaxExtraQuotients)
                    throw EscalationError(
                        "no convergent certified a positive epsilon for "
                        "d1=" + std::to_string(members[i].d1) +
                        " d2=" + std::to_string(members[i].d2) +
                        " m1=" + std::to_string(members[i].m1));
                extra += 16;
                cf = expand_cf(tau, 6 * M, config.budget, extra);
                results[i].need_more_cf = false;
                run_member(i);
            }
        }

        long worst = 0;
        mpq_class min_lo;
        bool first = true;
        for (const MemberResult& r : results) {
            s2.families.push_back(r.row);
            worst = std::max(worst, r.bound);
            if (first || r.eps_lo < min_lo) {
                min_lo = r.eps_lo;
                s2.eps_min = r.row.eps;
                first = false;
            }
        }
        s2.n_bound = worst;
    } catch (const EscalationError& e) {
        return inconclusive("stage-2 reduction", e.what());
    } catch (const AmbiguityError& e) {
        return inconclusive("stage-2 reduction", e.what());
    }
    cert.stage2 = s2;

    // Verdict.  The analytic bounds all assume n > 250, so the exhaustive
    // cutoff must reach at least 250 regardless of the reduced bound.
    const bool range_ok = config.low_range_cutoff >= 250;
    cert.closed = range_ok && s2.n_bound <= config.low_range_cutoff;
    std::string reason;
    if (cert.closed) {
        reason = "stage-2 reduction certifies n <= " +
                 std::to_string(s2.n_bound) +
                 " for every solution with n > 250, and the exhaustive "
                 "search over 0 <= n <= " +
                 std::to_string(config.low_range_cutoff) +
                 " (full pattern space d1 1-9, d2 0-9, m1, m2 >= 1, "
                 "including d1 = d2 and m2 > m1 — deliberately wider than "
                 "the quoted search ranges, which would exclude 13 and 277) "
                 "found exactly " +
                 std::to_string(cert.solutions.size()) + " solutions";
    } else if (!range_ok) {
        reason = "cutoff " + std::to_string(config.low_range_cutoff) +
                 " leaves the window up to 250 uncovered; the analytic "
                 "bounds assume n > 250";
    } else {
        reason = "stage-2 bound " + std::to_string(s2.n_bound) +
                 " exceeds the low-range cutoff " +
                 std::to_string(config.low_range_cutoff);
    }
    if (config.paper_constants) {
        reason += "; reference-constants mode: M = 10^29 is an external "
                  "reference input smaller than this run's own m_sum_bound " +
                  cert.m_sum_bound.get_str() +
                  ", so the verdict is relative to that reference bound";
    }
    cert.reason = reason;
    return cert;
}

namespace {

// Stored string must be a faithful upper bound for the recomputed enclosure:
// at least lo (soundness) and at most hi*(1 + 2^-40) (rendering slack only).
void check_upper_bound(VerifyReport& rep, const std::string& label,
                       const std::string& stored, const RealInterval& fresh) {
    mpq_class v;
    try {
        v = parse_decimal(stored);
    } catch (const DomainError& e) {
        rep.fail(label + ": " + e.what());
        return;
    }
    if (v < fresh.lo_q()) {
        rep.fail(label + ": stored bound " + stored +
                 " lies below the recomputed enclosure");
        return;
    }
    mpq_class hi = fresh.hi_q();
    mpz_class scale = mpz_class(1) << 40;
    if (v * scale > hi * (scale + 1))
        rep.fail(label + ": stored bound " + stored +
                 " is far above the recomputed enclosure");
}

// The reference value must be present and must genuinely differ from the
// recomputed value — the report exists to record the discrepancy.
void check_discrepancy(VerifyReport& rep, const std::string& label,
                       const std::string& value,
                       const std::string& paper_value) {
    mpq_class v, p;
    try {
        v = parse_decimal(value);
        p = parse_decimal(paper_value);
    } catch (const DomainError& e) {
        rep.fail(label + ": " + e.what());
        return;
    }
    mpq_class diff = v - p;
    if (diff < 0)
        diff = -diff;
    mpq_class mag = v > p ? v : p;
    if (diff * 10 <= mag)
        rep.fail(label + ": reference value " + paper_value +
                 " does not differ from the computed value " + value +
                 "; the discrepancy report would be vacuous");
}

// Stored epsilon must be positive, no larger than the recomputed lower
// endpoint, and within rendering slack of it.
bool check_eps(VerifyReport& rep, const std::string& label,
               const std::string& stored, const RealInterval& fresh) {
    mpq_class v;
    try {
        v = parse_decimal(stored);
    } catch (const DomainError& e) {
        rep.fail(label + ": " + e.what());
        return false;
    }
    if (v <= 0) {
        rep.fail(label + ": stored epsilon " + stored + " is not positive");
        return false;
    }
    mpq_class lo = fresh.lo_q();
    if (v > lo) {
        rep.fail(label + ": stored epsilon " + stored +
                 " exceeds the recomputed certified lower bound");
        return false;
    }
    mpz_class scale = mpz_class(1) << 40;
    if (v * scale < lo * (scale - 1)) {
        rep.fail(label + ": stored epsilon " + stored +
                 " is inconsistent with the recomputed value");
        return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_certificate_json(const ordered_json& j) {
    VerifyReport rep;
    ProofCertificate cert;
    try {
        cert = certificate_from_json(j);
    } catch (const std::exception& e) {
        rep.fail(std::string("schema: ") + e.what());
        return rep;
    }

    try {
        if (cert.version != "1.0.0")
            rep.fail("meta: unsupported version '" + cert.version + "'");
        if (cert.precision_bits < 2) {
            rep.fail("meta: precision_bits must be >= 2");
            return rep;
        }
        PrecisionBudget budget;
        budget.working_bits = static_cast<mpfr_prec_t>(cert.precision_bits);
        budget.max_bits =
            std::max<mpfr_prec_t>(budget.working_bits, mpfr_prec_t(16384));

        // Low range: the recorded list must equal a fresh exhaustive search.
        if (cert.cutoff < 20) {
            rep.fail("low_range: cutoff below 20");
        } else {
            std::vector<SolutionRecord> fresh = low_range_search(cert.cutoff);
            if (!(fresh == cert.solutions))
                rep.fail("low_range: solution list does not match a fresh "
                         "exhaustive search up to " +
                         std::to_string(cert.cutoff));
        }

        // Initial bounds: recompute at the recorded precision.
        InitialBounds ib = initial_bounds(budget);
        const std::pair<const char*, const RealInterval*> expected_heights[] = {
            {"h_eta1_step1", &ib.h_eta1_step1.value},
            {"A1_step1", &ib.A1_step1},
            {"m1_log10_coeff", &ib.m1_coeff},
            {"h_eta1_step2_coeff", &ib.h_eta1_step2.value},
        };
        if (cert.heights.size() != 4) {
            rep.fail("initial_bounds: expected 4 height records");
        } else {
            for (size_t i = 0; i < 4; ++i) {
                const HeightRecord& h = cert.heights[i];
                if (h.name != expected_heights[i].first) {
                    rep.fail("initial_bounds: height record " +
                             std::to_string(i) + " should be '" +
                             expected_heights[i].first + "', found '" +
                             h.name + "'");
                    continue;
                }
                check_upper_bound(rep, "initial_bounds: " + h.name, h.value,
                                  *expected_heights[i].second);
                check_discrepancy(rep, "initial_bounds: " + h.name, h.value,
                                  h.paper_value);
            }
        }
        check_upper_bound(rep, "initial_bounds: matveev stage1",
                          cert.matveev_stage1, ib.matveev_stage1);
        check_upper_bound(rep, "initial_bounds: matveev stage2",
                          cert.matveev_stage2, ib.matveev_stage2);
        check_discrepancy(rep, "initial_bounds: matveev stage1",
                          cert.matveev_stage1, cert.paper_stage1);
        check_discrepancy(rep, "initial_bounds: matveev stage2",
                          cert.matveev_stage2, cert.paper_stage2);
        if (cert.gsl_r != ib.r)
            rep.fail("initial_bounds: gsl r mismatch");
        check_upper_bound(rep, "initial_bounds: gsl H", cert.gsl_H, ib.H);
        if (cert.gsl_n_bound != ib.n_bound)
            rep.fail("initial_bounds: n_bound does not match recomputation");
        check_discrepancy(rep, "initial_bounds: gsl n_bound",
                          cert.gsl_n_bound.get_str(),
                          cert.gsl_paper_n_bound);
        if (cert.m_sum_bound != ib.m_sum_bound)
            rep.fail("initial_bounds: m_sum_bound does not match "
                     "recomputation");

        const bool have_stage1 = !cert.stage1.eps_table.empty();
        const bool have_stage2 = !cert.stage2.families.empty();

        if (have_stage1 || have_stage2) {
            const mpz_class& M = cert.stage1.M;
            if (cert.stage2.M != M && have_stage2)
                rep.fail("reduction: stage-1 and stage-2 M differ");
            if (!is_power_of_ten(M))
                rep.fail("reduction: M is not a power of ten");
            if (!(M >= cert.m_sum_bound || M == pow10_z(29)))
                rep.fail("reduction: M neither covers m_sum_bound nor "
                         "equals the 10^29 reference input");

            mpz_class max_q = cert.stage1.q;
            for (const FamilyRow& f : cert.stage2.families)
                if (f.q > max_q)
                    max_q = f.q;

            int extra = 16;
            ContinuedFraction cf = expand_cf(tau_recipe(), 6 * M, budget,
                                             extra);
            while (cf.convergents.back().second <= max_q &&
                   extra < kMaxExtraQuotients) {
                extra += 16;
                cf = expand_cf(tau_recipe(), 6 * M, budget, extra);
            }
            if (!cf.determinant_ok())
                rep.fail("reduction: recomputed convergents violate the "
                         "determinant identity");
            std::set<mpz_class> denominators;
            for (const auto& [p, q] : cf.convergents)
                denominators.insert(q);
            auto check_q = [&](const std::string& label, const mpz_class& q) {
                if (q <= 6 * M)
                    rep.fail(label + ": q = " + q.get_str() +
                             " is not above 6M");
                if (!denominators.count(q))
                    rep.fail(label + ": q = " + q.get_str() +
                             " is not a convergent denominator of tau");
            };

            if (have_stage1) {
                check_q("stage1", cert.stage1.q);
                if (cert.stage1.eps_table.size() != 9) {
                    rep.fail("stage1: expected 9 epsilon rows");
                } else {
                    long worst = 1;
                    mpq_class min_v;
                    bool first = true, usable = true;
                    for (size_t i = 0; i < 9; ++i) {
                        const EpsRow& row = cert.stage1.eps_table[i];
                        if (row.d1 != static_cast<int>(i) + 1) {
                            rep.fail("stage1: epsilon rows must cover d1 = "
                                     "1..9 in order");
                            usable = false;
                            break;
                        }
                        ReductionInstance inst =
                            stage1_instance(row.d1, M);
                        std::optional<RealInterval> e =
                            epsilon(inst, cert.stage1.q, budget);
                        if (!e) {
                            rep.fail("stage1 d1=" + std::to_string(row.d1) +
                                     ": epsilon is not certified positive "
                                     "on recomputation");
                            usable = false;
                            continue;
                        }
                        if (!check_eps(rep,
                                       "stage1 d1=" + std::to_string(row.d1),
                                       row.eps, *e)) {
                            usable = false;
                            continue;
                        }
                        long K = reduced_bound(inst, cert.stage1.q, *e, budget);
                        worst = std::max(worst, K - 1);
                        mpq_class v = parse_decimal(row.eps);
                        if (first || v < min_v) {
                            min_v = v;
                            first = false;
                        }
                    }
                    if (usable) {
                        if (cert.stage1.m1_bound != worst)
                            rep.fail("stage1: m1_bound " +
                                     std::to_string(cert.stage1.m1_bound) +
                                     " does not match recomputed " +
                                     std::to_string(worst));
                        if (parse_decimal(cert.stage1.eps_min) != min_v)
                            rep.fail("stage1: eps_min does not equal the "
                                     "table minimum");
                    }
                }
            }

            if (have_stage2) {
                const long m1_bound = cert.stage1.m1_bound;
                const size_t expected =
                    9u * 10u * static_cast<size_t>(m1_bound);
                if (cert.stage2.families.size() != expected)
                    rep.fail("stage2: expected " + std::to_string(expected) +
                             " family rows (9 x 10 x m1_bound), found " +
                             std::to_string(cert.stage2.families.size()));
                std::set<std::tuple<int, int, long>> seen;
                long worst = 0;
                mpq_class min_v;
                bool first = true, usable = true;
                for (const FamilyRow& f : cert.stage2.families) {
                    const std::string label =
                        "stage2 (d1=" + std::to_string(f.d1) +
                        ",d2=" + std::to_string(f.d2) +
                        ",m1=" + std::to_string(f.m1) + ")";
                    if (f.d1 < 1 || f.d1 > 9 || f.d2 < 0 || f.d2 > 9 ||
                        f.m1 < 1 || f.m1 > m1_bound) {
                        rep.fail(label + ": outside the family grid");
                        usable = false;
                        continue;
                    }
                    if (!seen.insert({f.d1, f.d2, f.m1}).second) {
                        rep.fail(label + ": duplicate family member");
                        usable = false;
                        continue;
                    }
                    check_q(label, f.q);
                    ReductionInstance inst =
                        stage2_instance(f.d1, f.d2, f.m1, M);
                    std::optional<RealInterval> e = epsilon(inst, f.q, budget);
                    if (!e) {
                        rep.fail(label + ": epsilon is not certified "
                                         "positive on recomputation");
                        usable = false;
                        continue;
                    }
                    if (!check_eps(rep, label, f.eps, *e)) {
                        usable = false;
                        continue;
                    }
                    long K = reduced_bound(inst, f.q, *e, budget);
                    worst = std::max(worst, K - 1);
                    mpq_class v = parse_decimal(f.eps);
                    if (first || v < min_v) {
                        min_v = v;
                        first = false;
                    }
                }
                if (usable && seen.size() != expected)
                    rep.fail("stage2: family grid is not fully covered");
                if (usable && !cert.stage2.families.empty()) {
                    if (cert.stage2.n_bound != worst)
                        rep.fail("stage2: n_bound " +
                                 std::to_string(cert.stage2.n_bound) +
                                 " does not match recomputed " +
                                 std::to_string(worst));
                    if (parse_decimal(cert.stage2.eps_min) != min_v)
                        rep.fail("stage2: eps_min does not equal the family "
                                 "minimum");
                }
            }
        }

        // Verdict logic.
        const bool supported = have_stage1 && have_stage2 &&
                               cert.cutoff >= 250 &&
                               cert.stage2.n_bound <= cert.cutoff;
        if (cert.closed != supported)
            rep.fail(std::string("verdict: closed = ") +
                     (cert.closed ? "true" : "false") +
                     " contradicts the recorded bounds");
        if (cert.reason.empty())
            rep.fail("verdict: reason must not be empty");
    } catch (const std::exception& e) {
        rep.fail(std::string("verification aborted: ") + e.what());
    }
    return rep;
}

VerifyReport verify_certificate(const std::string& path) {
    VerifyReport rep;
    std::ifstream in(path);
    if (!in) {
        rep.fail("cannot open certificate: " + path);
        return rep;
    }
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        rep.fail(std::string("certificate is not valid JSON: ") + e.what());
        return rep;
    }
    return verify_certificate_json(j);
}

}  // namespace narayana
