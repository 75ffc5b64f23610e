#include "cubic/report.hpp"

#include <sstream>

namespace cubic {

namespace {

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rational_to_string(v[i]));
    return a;
}

Json check_to_json(const CheckOutcome& c, bool sampled = false) {
    Json j;
    j["pass"] = c.pass;
    j["ran"] = c.ran;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (sampled) j["coverage"] = "sampled";
    return j;
}

}  // namespace

Json rational_fit_to_json(const legendre::RationalFit& fit) {
    Json j;
    j["numerator"] = fit.numerator.to_string();
    j["denominator"] = fit.denominator.to_string();
    j["denominator_degree"] = fit.denominator_degree;
    return j;
}

Json verdict_to_json(const legendre::LegendreVerdict& v) {
    Json j;
    j["status"] = legendre::status_name(v.status);
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.fstar) j["fstar"] = v.fstar->poly().to_string();
    j["certificates"] = {{"value", v.certificates.value},
                         {"gradient", v.certificates.gradient},
                         {"biduality", v.certificates.biduality}};
    j["irreducibility"] = "not checked";
    if (v.cone_witness) j["cone_direction"] = vec_to_json(*v.cone_witness);
    if (v.unknowns) {
        j["unknowns"] = v.unknowns;
        j["rank"] = v.rank;
        j["samples"] = v.samples_used;
        j["primes_used"] = v.primes_used;
    }
    return j;
}

Json jordan_report_to_json(const JordanReport& r) {
    Json j;
    Json checks;
    for (const auto& c : r.checks) {
        Json e;
        e["pass"] = c.pass;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks[c.name] = e;
    }
    j["checks"] = checks;
    j["trials"] = r.trials;
    j["unit_value"] = rational_to_string(r.unit_value);
    j["all_pass"] = r.all_pass();
    j["formula_note"] = r.formula_note;
    return j;
}

Json jordan_summary_to_json(const JordanSummary& s) {
    Json j;
    j["dimension"] = s.dimension;
    j["unit"] = vec_to_json(s.unit);
    j["verification"] = jordan_report_to_json(s.report);
    if (s.simple.has_value()) j["simple"] = *s.simple;
    return j;
}

Json jordan_structure_to_json(const JordanStructure& js, const JordanReport* report) {
    Json j;
    j["dimension"] = js.dim();
    j["unit"] = vec_to_json(js.unit());
    j["unit_value"] = rational_to_string(js.unit_value());
    Json sc = Json::array();
    for (const auto& c : js.structure_constants()) sc.push_back(rational_to_string(c));
    j["structure_constants"] = std::move(sc);  // flat, index (i*n + j)*n + k
    j["indexing"] = "(i*n + j)*n + k";
    if (report) j["verification"] = jordan_report_to_json(*report);
    return j;
}

Json severi_report_to_json(const SeveriReport& r) {
    Json j;
    j["singular_dim"] = r.singular_dim;
    j["ambient_dim"] = r.ambient_dim;
    j["terracini_rank"] = r.terracini_rank;
    j["samples"] = r.samples;
    j["tangent_dim_constant"] = r.tangent_dim_constant;
    j["matches_expected_dim"] = r.singular_dim_matches_expected;
    j["checks"] = {{"dual_inclusion", check_to_json(r.dual_inclusion)},
                   {"secant_in_X", check_to_json(r.secant_in_X)},
                   {"gauss_linear", check_to_json(r.gauss_linear, /*sampled=*/true)},
                   {"orbit_closure", check_to_json(r.orbit_closure)}};
    if (!r.findings.empty()) j["findings"] = r.findings;
    j["all_pass"] = r.all_pass();
    return j;
}

Json analysis_report_to_json(const AnalysisReport& r) {
    Json j;
    j["input"] = r.input;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["verdict"] = verdict_to_json(r.verdict);
    if (r.jordan) j["jordan"] = jordan_summary_to_json(*r.jordan);
    if (r.severi) j["severi"] = severi_report_to_json(*r.severi);
    if (r.severi_notice) j["severi"] = {{"skipped", *r.severi_notice}};
    if (r.rational_fit) j["rational_fit"] = rational_fit_to_json(*r.rational_fit);
    if (r.include_timings) {
        Json t;
        for (const auto& [k, v] : r.timings_ms) t[k] = v;
        j["timings"] = t;
    }
    return j;
}

std::string analysis_report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "n: " << r.n << "   seed: " << r.seed << "\n";
    os << "status: " << legendre::status_name(r.verdict.status);
    if (!r.verdict.reason.empty()) os << " (" << r.verdict.reason << ")";
    os << "\n";
    if (r.verdict.cone_witness) {
        os << "cone direction: ";
        const Vec& v = *r.verdict.cone_witness;
        for (std::size_t i = 0; i < v.dim(); ++i)
            os << (i ? ", " : "(") << rational_to_string(v[i]);
        os << ")\n";
    }
    if (r.verdict.fstar) os << "fstar: " << r.verdict.fstar->poly().to_string() << "\n";
    os << "certificates: value=" << r.verdict.certificates.value
       << " gradient=" << r.verdict.certificates.gradient
       << " biduality=" << r.verdict.certificates.biduality << "\n";
    if (r.rational_fit) {
        os << "rational transform: (" << r.rational_fit->numerator.to_string() << ") / ("
           << r.rational_fit->denominator.to_string()
           << "), denominator degree " << r.rational_fit->denominator_degree << "\n";
    }
    if (r.jordan) {
        os << "jordan: dim " << r.jordan->dimension << ", unit value "
           << rational_to_string(r.jordan->unit_value) << ", checks "
           << (r.jordan->report.all_pass() ? "pass" : "FAIL");
        if (r.jordan->simple.has_value())
            os << ", simplicity probe " << (*r.jordan->simple ? "true" : "false");
        os << "\n";
    }
    if (r.severi) {
        os << "severi: singular dim " << r.severi->singular_dim << " in P^"
           << r.severi->ambient_dim << ", terracini " << r.severi->terracini_rank
           << ", checks " << (r.severi->all_pass() ? "pass" : "FAIL") << "\n";
        for (const auto& fnd : r.severi->findings) os << "  finding: " << fnd << "\n";
    }
    if (r.severi_notice) os << "severi: skipped (" << *r.severi_notice << ")\n";
    if (r.include_timings) {
        os << "timings (ms):";
        for (const auto& [k, v] : r.timings_ms) os << " " << k << "=" << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace cubic
