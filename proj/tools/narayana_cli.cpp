// Command-line front end: exhaustive search, analytic bounds, lattice
// reduction, full proof runs with certificate emission, certificate
// verification, and the enumeration/decomposition cross-check.
//
// Exit codes: 0 success (for prove: theorem closed), 1 usage or domain
// error, 2 proof inconclusive, 3 certificate verification failure,
// 4 precision or certification failure.

#include <algorithm>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "narayana/pipeline.hpp"

using namespace narayana;

namespace {

mpz_class pow10_z(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

int run_search(long max_n) {
    std::vector<SolutionRecord> sols = low_range_search(max_n);
    for (const SolutionRecord& s : sols)
        std::cout << "n=" << s.n << "  N(n)=" << s.value.get_str()
                  << "  = (digit " << s.pattern.d1 << " x " << s.pattern.m1
                  << ") . (digit " << s.pattern.d2 << " x " << s.pattern.m2
                  << ")\n";
    std::cout << sols.size() << " solutions with 0 <= n <= " << max_n << "\n";
    return 0;
}

int run_bounds(bool paper) {
    PrecisionBudget budget;
    InitialBounds ib = initial_bounds(budget);
    ProofCertificate cert;
    cert.precision_bits = budget.working_bits;
    fill_initial_bounds(cert, ib);
    mpz_class M;
    if (paper) {
        M = pow10_z(29);
    } else {
        M = 1;
        while (M < ib.m_sum_bound)
            M *= 10;
    }
    ordered_json j = certificate_to_json(cert);
    ordered_json out;
    out["initial_bounds"] = j["initial_bounds"];
    out["M"] = M.get_str();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_reduce(int stage, const std::string& big_m) {
    ProofConfig cfg;
    cfg.jobs = default_jobs();
    if (!big_m.empty()) {
        mpz_class m;
        if (mpz_set_str(m.get_mpz_t(), big_m.c_str(), 10) != 0 || m < 1) {
            std::cerr << "error: --big-m must be a positive decimal integer\n";
            return 1;
        }
        cfg.M_override = m;
    }
    ProofCertificate cert = prove(cfg);
    if (cert.stage1.eps_table.empty() ||
        (stage == 2 && cert.stage2.families.empty())) {
        std::cerr << "reduction failed: " << cert.reason << "\n";
        return 4;
    }
    ordered_json j = certificate_to_json(cert);
    ordered_json out;
    out["reduction"]["stage1"] = j["reduction"]["stage1"];
    if (stage == 2)
        out["reduction"]["stage2"] = j["reduction"]["stage2"];
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_prove(long cutoff, long precision_bits, bool paper,
              const std::string& emit_path, int jobs) {
    ProofConfig cfg;
    cfg.low_range_cutoff = cutoff;
    cfg.paper_constants = paper;
    cfg.jobs = jobs;
    if (precision_bits > 0) {
        // Pinning the precision also removes the escalation headroom, so a
        // too-small value fails honestly instead of silently escalating.
        cfg.budget.working_bits = static_cast<mpfr_prec_t>(precision_bits);
        cfg.budget.max_bits = static_cast<mpfr_prec_t>(precision_bits);
    }
    ProofCertificate cert = prove(cfg);
    if (!emit_path.empty()) {
        save_certificate(cert, emit_path);
        std::cout << (cert.closed ? "closed" : "not closed") << ": "
                  << cert.reason << "\n"
                  << "certificate written to " << emit_path << "\n";
    } else {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    }
    return cert.closed ? 0 : 2;
}

int run_verify(const std::string& path) {
    VerifyReport rep = verify_certificate(path);
    if (rep.ok) {
        std::cout << "certificate OK: " << path << "\n";
        return 0;
    }
    for (const std::string& f : rep.failures)
        std::cerr << "FAIL: " << f << "\n";
    std::cerr << rep.failures.size() << " check(s) failed\n";
    return 3;
}

int run_oracle(long max_digits) {
    try {
        oracle_cross_check(max_digits);
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    std::cout << "enumeration and decomposition agree on all values below 10^"
              << max_digits << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified determination of the Narayana numbers that are "
                 "concatenations of two repdigits"};
    app.require_subcommand(1);

    long max_n = 250;
    CLI::App* search = app.add_subcommand(
        "search", "Exhaustively scan N(0), ..., N(max-n) for concatenations "
                  "of two repdigits");
    search->add_option("--max-n", max_n, "Largest index to scan (>= 20)")
        ->required();

    bool bounds_paper = false;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "Compute the certified linear-form bounds and the "
                  "reduction parameter M");
    bounds->add_flag("--paper-constants", bounds_paper,
                     "Report M = 10^29, the reference derivation's choice");

    int stage = 1;
    std::string big_m;
    CLI::App* reduce = app.add_subcommand(
        "reduce", "Run the reduction stages and print the resulting tables");
    reduce->add_option("--stage", stage, "Reduction stage to report")
        ->required()
        ->check(CLI::Range(1, 2));
    reduce->add_option(
        "--big-m", big_m,
        "Lower bound for the reduction parameter M (rounded up to a power "
        "of ten; never below the derived m_sum_bound)");

    long cutoff = 250;
    long precision_bits = 0;
    bool prove_paper = false;
    std::string emit_path;
    int jobs = default_jobs();
    CLI::App* prove_cmd = app.add_subcommand(
        "prove", "Run the full pipeline and emit a machine-checkable "
                 "certificate");
    prove_cmd->add_option("--cutoff", cutoff,
                          "Exhaustive-search cutoff (default 250)");
    prove_cmd->add_option("--precision-bits", precision_bits,
                          "Pin the working precision and disable escalation");
    prove_cmd->add_flag("--paper-constants", prove_paper,
                        "Reduce with the reference M = 10^29");
    prove_cmd->add_option("--emit", emit_path,
                          "Write the certificate to this path instead of "
                          "stdout");
    prove_cmd->add_option("--jobs", jobs,
                          "Worker threads for stage-2 reduction");

    std::string cert_path;
    CLI::App* verify = app.add_subcommand(
        "verify", "Recompute and recheck a previously emitted certificate");
    verify->add_option("path", cert_path, "Certificate file")->required();

    long max_digits = 0;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Cross-check pattern enumeration against digit "
                  "decomposition on every sequence term in range");
    oracle->add_option("--max-digits", max_digits,
                       "Compare on all values below 10^max-digits")
        ->required()
        ->check(CLI::Range(2l, 10000l));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*search)
            return run_search(max_n);
        if (*bounds)
            return run_bounds(bounds_paper);
        if (*reduce)
            return run_reduce(stage, big_m);
        if (*prove_cmd)
            return run_prove(cutoff, precision_bits, prove_paper, emit_path,
                             jobs);
        if (*verify)
            return run_verify(cert_path);
        if (*oracle)
            return run_oracle(max_digits);
    } catch (const EscalationError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 4;
    } catch (const AmbiguityError& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
