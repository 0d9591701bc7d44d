#include "narayana/certificate.hpp"

#include <cctype>
#include <ctime>
#include <fstream>

namespace narayana {

namespace {

std::string z_str(const mpz_class& v) { return v.get_str(); }

std::string l_str(long v) { return std::to_string(v); }

mpz_class parse_z(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw DomainError(std::string("certificate: missing string field '") +
                          key + "'");
    const std::string s = j[key].get<std::string>();
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw DomainError(std::string("certificate: field '") + key +
                          "' is not an integer: " + s);
    return v;
}

long parse_long(const ordered_json& j, const char* key) {
    mpz_class v = parse_z(j, key);
    if (!v.fits_slong_p())
        throw DomainError(std::string("certificate: field '") + key +
                          "' out of range");
    return v.get_si();
}

std::string parse_str(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw DomainError(std::string("certificate: missing string field '") +
                          key + "'");
    return j[key].get<std::string>();
}

const ordered_json& child(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_object())
        throw DomainError(std::string("certificate: missing object '") + key +
                          "'");
    return j[key];
}

const ordered_json& child_array(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw DomainError(std::string("certificate: missing array '") + key +
                          "'");
    return j[key];
}

}  // namespace

ordered_json certificate_to_json(const ProofCertificate& cert) {
    ordered_json j;
    j["meta"] = {{"version", cert.version},
                 {"precision_bits", l_str(cert.precision_bits)},
                 {"timestamp", cert.timestamp}};

    ordered_json solutions = ordered_json::array();
    for (const SolutionRecord& s : cert.solutions)
        solutions.push_back({{"n", l_str(s.n)},
                             {"value", z_str(s.value)},
                             {"d1", l_str(s.pattern.d1)},
                             {"m1", l_str(s.pattern.m1)},
                             {"d2", l_str(s.pattern.d2)},
                             {"m2", l_str(s.pattern.m2)}});
    j["low_range"] = {{"cutoff", l_str(cert.cutoff)},
                      {"solutions", std::move(solutions)}};

    ordered_json heights = ordered_json::array();
    for (const HeightRecord& h : cert.heights)
        heights.push_back({{"name", h.name},
                           {"value", h.value},
                           {"paper_value", h.paper_value}});
    j["initial_bounds"] = {
        {"heights", std::move(heights)},
        {"matveev",
         {{"stage1", cert.matveev_stage1},
          {"stage2", cert.matveev_stage2},
          {"paper_stage1", cert.paper_stage1},
          {"paper_stage2", cert.paper_stage2}}},
        {"gsl",
         {{"r", l_str(cert.gsl_r)},
          {"H", cert.gsl_H},
          {"n_bound", z_str(cert.gsl_n_bound)},
          {"paper_n_bound", cert.gsl_paper_n_bound}}},
        {"m_sum_bound", z_str(cert.m_sum_bound)}};

    ordered_json eps_table = ordered_json::array();
    for (const EpsRow& row : cert.stage1.eps_table)
        eps_table.push_back({{"d1", l_str(row.d1)}, {"eps", row.eps}});
    ordered_json families = ordered_json::array();
    for (const FamilyRow& row : cert.stage2.families)
        families.push_back({{"d1", l_str(row.d1)},
                            {"d2", l_str(row.d2)},
                            {"m1", l_str(row.m1)},
                            {"q", z_str(row.q)},
                            {"eps", row.eps}});
    j["reduction"] = {
        {"stage1",
         {{"M", z_str(cert.stage1.M)},
          {"q", z_str(cert.stage1.q)},
          {"eps_table", std::move(eps_table)},
          {"eps_min", cert.stage1.eps_min},
          {"m1_bound", l_str(cert.stage1.m1_bound)}}},
        {"stage2",
         {{"M", z_str(cert.stage2.M)},
          {"families", std::move(families)},
          {"eps_min", cert.stage2.eps_min},
          {"n_bound", l_str(cert.stage2.n_bound)}}}};

    j["verdict"] = {{"closed", cert.closed}, {"reason", cert.reason}};
    return j;
}

ProofCertificate certificate_from_json(const ordered_json& j) {
    ProofCertificate cert;
    const ordered_json& meta = child(j, "meta");
    cert.version = parse_str(meta, "version");
    cert.precision_bits = parse_long(meta, "precision_bits");
    cert.timestamp = parse_str(meta, "timestamp");

    const ordered_json& low = child(j, "low_range");
    cert.cutoff = parse_long(low, "cutoff");
    for (const ordered_json& s : child_array(low, "solutions")) {
        SolutionRecord rec;
        rec.n = parse_long(s, "n");
        rec.value = parse_z(s, "value");
        rec.pattern.d1 = static_cast<int>(parse_long(s, "d1"));
        rec.pattern.m1 = parse_long(s, "m1");
        rec.pattern.d2 = static_cast<int>(parse_long(s, "d2"));
        rec.pattern.m2 = parse_long(s, "m2");
        cert.solutions.push_back(std::move(rec));
    }

    const ordered_json& ib = child(j, "initial_bounds");
    for (const ordered_json& h : child_array(ib, "heights"))
        cert.heights.push_back(HeightRecord{parse_str(h, "name"),
                                            parse_str(h, "value"),
                                            parse_str(h, "paper_value")});
    const ordered_json& matveev = child(ib, "matveev");
    cert.matveev_stage1 = parse_str(matveev, "stage1");
    cert.matveev_stage2 = parse_str(matveev, "stage2");
    cert.paper_stage1 = parse_str(matveev, "paper_stage1");
    cert.paper_stage2 = parse_str(matveev, "paper_stage2");
    const ordered_json& gsl = child(ib, "gsl");
    cert.gsl_r = static_cast<int>(parse_long(gsl, "r"));
    cert.gsl_H = parse_str(gsl, "H");
    cert.gsl_n_bound = parse_z(gsl, "n_bound");
    cert.gsl_paper_n_bound = parse_str(gsl, "paper_n_bound");
    cert.m_sum_bound = parse_z(ib, "m_sum_bound");

    const ordered_json& red = child(j, "reduction");
    const ordered_json& s1 = child(red, "stage1");
    cert.stage1.M = parse_z(s1, "M");
    cert.stage1.q = parse_z(s1, "q");
    for (const ordered_json& row : child_array(s1, "eps_table"))
        cert.stage1.eps_table.push_back(EpsRow{
            static_cast<int>(parse_long(row, "d1")), parse_str(row, "eps")});
    cert.stage1.eps_min = parse_str(s1, "eps_min");
    cert.stage1.m1_bound = parse_long(s1, "m1_bound");
    const ordered_json& s2 = child(red, "stage2");
    cert.stage2.M = parse_z(s2, "M");
    for (const ordered_json& row : child_array(s2, "families"))
        cert.stage2.families.push_back(
            FamilyRow{static_cast<int>(parse_long(row, "d1")),
                      static_cast<int>(parse_long(row, "d2")),
                      parse_long(row, "m1"), parse_z(row, "q"),
                      parse_str(row, "eps")});
    cert.stage2.eps_min = parse_str(s2, "eps_min");
    cert.stage2.n_bound = parse_long(s2, "n_bound");

    const ordered_json& verdict = child(j, "verdict");
    if (!verdict.contains("closed") || !verdict["closed"].is_boolean())
        throw DomainError("certificate: verdict.closed must be a boolean");
    cert.closed = verdict["closed"].get<bool>();
    cert.reason = parse_str(verdict, "reason");
    return cert;
}

void save_certificate(const ProofCertificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot open certificate path for writing: " + path);
    out << certificate_to_json(cert).dump(2) << '\n';
    if (!out.good())
        throw DomainError("failed writing certificate to " + path);
}

ProofCertificate load_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open certificate: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DomainError(std::string("certificate is not valid JSON: ") +
                          e.what());
    }
    return certificate_from_json(j);
}

mpq_class parse_decimal(const std::string& s) {
    size_t i = 0;
    const size_t n = s.size();
    auto bad = [&]() -> DomainError {
        return DomainError("malformed decimal string: '" + s + "'");
    };
    if (n == 0)
        throw bad();
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    std::string digits;
    long frac_len = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i])))
        digits += s[i++];
    if (i < n && s[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac_len;
        }
    }
    if (digits.empty())
        throw bad();
    long exp10 = 0;
    if (i < n && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            exp_neg = (s[i] == '-');
            ++i;
        }
        if (i == n)
            throw bad();
        std::string exp_digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i])))
            exp_digits += s[i++];
        if (exp_digits.empty() || exp_digits.size() > 9)
            throw bad();
        exp10 = std::stol(exp_digits);
        if (exp_neg)
            exp10 = -exp10;
    }
    if (i != n)
        throw bad();

    mpz_class mantissa(digits, 10);
    if (neg)
        mantissa = -mantissa;
    long shift = exp10 - frac_len;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10,
                  static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class v;
    if (shift >= 0)
        v = mpq_class(mantissa * pow10);
    else
        v = mpq_class(mantissa, pow10);
    v.canonicalize();
    return v;
}

std::string iso8601_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc;
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void VerifyReport::fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
}

}  // namespace narayana
