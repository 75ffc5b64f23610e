#include "cubic/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cubic/poly_io.hpp"
#include "cubic/report.hpp"
#include "cubic/rng.hpp"
#include "cubic/tau.hpp"

namespace cubic::cli {

namespace {

struct LoadedInput {
    CubicForm form;
    std::string name;
    const CatalogEntry* entry = nullptr;  // non-null for catalog inputs
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double lap() {
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        t0 = t1;
        return ms;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedInput load_input(const std::vector<CatalogEntry>& cat, const std::string& path,
                       const std::string& catalog_name, int vars) {
    if (!catalog_name.empty()) {
        const CatalogEntry* e = catalog_find(cat, catalog_name);
        if (!e) throw UsageError("unknown catalog entry: " + catalog_name);
        return {e->form, e->name, e};
    }
    if (path.empty()) throw UsageError("no input given (path or --catalog NAME)");
    if (const CatalogEntry* e = catalog_find(cat, path)) return {e->form, e->name, e};
    return {CubicForm(parse_poly(read_file(path), vars)), path, nullptr};
}

// Base point with f(I) != 0 and tau_{f,I} invertible; rescaled to
// f(I) = 1 whenever the cube root is rational.
std::optional<Vec> pick_unit_point(const CubicForm& f, std::uint64_t seed) {
    auto usable = [&](const Vec& I) {
        if (cubic::is_zero(f.eval(I))) return false;
        return inverse(tau(f, I).m).has_value();
    };
    auto samples = legendre::sample_off_hypersurface(f, 16, splitmix64(seed ^ 0x756e6974));
    for (const auto& A : samples) {
        if (auto s = exact_cube_root(f.eval(A))) {
            Vec I = (1 / *s) * A;
            if (usable(I)) return I;
        }
    }
    for (const auto& A : samples)
        if (usable(A)) return A;  // relaxed normalization, f(I) = c != 1
    return std::nullopt;
}

AnalysisReport run_analysis(const LoadedInput& in, std::uint64_t seed, int trials,
                            int den_bound, bool timings, int samples) {
    AnalysisReport rep;
    rep.input = in.form.poly().to_string();
    rep.n = in.form.vars();
    rep.seed = seed;
    rep.include_timings = timings;
    Timer timer;

    rep.verdict = legendre::analyze(in.form, seed);
    rep.timings_ms.emplace_back("legendre", timer.lap());

    if (rep.verdict.status == legendre::Status::NotEkp) {
        try {
            rep.rational_fit = legendre::fit_rational_legendre(in.form, den_bound, seed);
        } catch (const std::domain_error&) {
            // log-degenerate inputs have no rational transform search
        }
        rep.timings_ms.emplace_back("rational_fit", timer.lap());
    }

    if (rep.verdict.status != legendre::Status::Ekp) return rep;

    std::optional<Vec> unit =
        in.entry && in.entry->unit_point ? in.entry->unit_point : pick_unit_point(in.form, seed);
    if (unit) {
        JordanStructure J = jordan_product(in.form, *unit);
        JordanSummary js;
        js.dimension = J.dim();
        js.unit = *unit;
        js.unit_value = J.unit_value();
        const std::optional<Vec>& witness =
            in.entry ? in.entry->singular_seed : std::optional<Vec>{};
        js.report = jordan_verify(J, trials, seed, witness);
        js.simple = simplicity_probe(J, 5, seed);
        rep.jordan = std::move(js);
    }
    rep.timings_ms.emplace_back("jordan", timer.lap());

    if (in.entry && in.entry->singular_seed) {
        rep.severi = severi_report(*in.entry, *rep.verdict.fstar, seed, samples);
    } else {
        rep.severi_notice = "no singular seed";
    }
    rep.timings_ms.emplace_back("severi", timer.lap());
    return rep;
}

int cmd_analyze(const LoadedInput& in, std::uint64_t seed, int trials, int den_bound,
                bool json, bool timings, int samples, bool jordan_tensor,
                const std::string& out_path, std::ostream& out) {
    AnalysisReport rep = run_analysis(in, seed, trials, den_bound, timings, samples);
    Json jrep = analysis_report_to_json(rep);
    if (jordan_tensor && rep.verdict.status == legendre::Status::Ekp && rep.jordan) {
        const JordanStructure J = jordan_product(in.form, rep.jordan->unit);
        jrep["jordan_structure"] = jordan_structure_to_json(J, &rep.jordan->report);
    }
    const std::string text =
        json ? jrep.dump(2) + "\n" : analysis_report_to_text(rep);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write: " + out_path);
        f << text;
    } else {
        out << text;
    }
    const bool findings = (rep.jordan && !rep.jordan->report.all_pass()) ||
                          (rep.severi && !rep.severi->all_pass());
    return findings ? 1 : 0;
}

int cmd_catalog(const std::vector<CatalogEntry>& cat, bool json, std::ostream& out) {
    if (json) {
        Json arr = Json::array();
        for (const auto& e : cat) {
            Json j;
            j["name"] = e.name;
            j["n"] = e.n;
            j["is_ekp"] = e.expected.is_ekp;
            j["cone"] = e.expected.cone;
            if (e.expected.singular_dim) j["singular_dim"] = *e.expected.singular_dim;
            j["notes"] = e.expected.notes;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : cat) {
        out << e.name << "  n=" << e.n << "  ekp=" << (e.expected.is_ekp ? "yes" : "no")
            << "  cone=" << (e.expected.cone ? "yes" : "no");
        if (e.expected.singular_dim) out << "  singular_dim=" << *e.expected.singular_dim;
        out << "  -- " << e.expected.notes << "\n";
    }
    return 0;
}

// ---- verify suites -------------------------------------------------------

struct SuiteRun {
    std::ostream& out;
    bool ok = true;

    void check(bool pass, const std::string& name, const std::string& witness = "") {
        out << "  [" << (pass ? "pass" : "FAIL") << "] " << name;
        if (!pass && !witness.empty()) out << "  witness: " << witness;
        out << "\n";
        if (!pass) ok = false;
    }
};

bool suite_poly(const LoadedInput& in, std::uint64_t seed, std::ostream& out) {
    const CubicForm& f = in.form;
    const int n = f.vars();
    SuiteRun s{out};
    Rng rng = Rng(seed).derive(0x706f6c79);

    s.check(parse_poly(f.poly().to_string(), n) == f.poly(), "parse/print round-trip");

    bool sym = true;
    for (int t = 0; t < 5 && sym; ++t) {
        Vec a(n), b(n), c(n);
        for (int i = 0; i < n; ++i) {
            a[i] = rng.rational_in(-7, 7);
            b[i] = rng.rational_in(-7, 7);
            c[i] = rng.rational_in(-7, 7);
        }
        const Rational q = f.polarize(a, b, c);
        sym = q == f.polarize(a, c, b) && q == f.polarize(b, a, c) && q == f.polarize(b, c, a) &&
              q == f.polarize(c, a, b) && q == f.polarize(c, b, a);
    }
    s.check(sym, "polarization symmetric under all argument permutations");

    {
        Poly euler(n);
        for (int i = 0; i < n; ++i) euler += Poly::variable(n, i) * f.gradient()[i];
        s.check(euler == make_rational(3) * f.poly(), "Euler identity x·grad f = 3f");
    }

    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            Vec a(n);
            for (int i = 0; i < n; ++i) a[i] = rng.rational_in(-7, 7);
            const Covec g = f.grad_at(a);
            for (int i = 0; i < n && ok; ++i) {
                const Rational direct = f.gradient()[i].eval(a.c);
                ok = g[i] == direct && g[i] == 3 * f.polarize(a, a, Vec::unit(n, i));
            }
        }
        s.check(ok, "gradient = 3Q(A,A,-) at 20 random points");
    }

    {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                std::vector<Poly::Term> ts;
                for (int k = 0; k < n; ++k) {
                    const Rational c6 = 6 * f.q_basis(i, j, k);
                    if (!cubic::is_zero(c6)) {
                        Monomial m(n);
                        m.e[k] = 1;
                        ts.emplace_back(std::move(m), c6);
                    }
                }
                ok = f.hessian()[i][j] == Poly::from_terms(n, std::move(ts));
            }
        s.check(ok, "hessian entries equal 6Q(e_i,e_j,x) as polynomials");
    }

    {
        // Coefficient of s·t·u in f(sA+tB+uC) over 6 equals the polarization.
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t) {
            Vec a(n), b(n), c(n);
            for (int i = 0; i < n; ++i) {
                a[i] = rng.rational_in(-5, 5);
                b[i] = rng.rational_in(-5, 5);
                c[i] = rng.rational_in(-5, 5);
            }
            std::vector<Poly> images;
            for (int i = 0; i < n; ++i) {
                Poly im = Poly::variable(3, 0) * a[i];
                im += Poly::variable(3, 1) * b[i];
                im += Poly::variable(3, 2) * c[i];
                images.push_back(std::move(im));
            }
            const Poly expanded = f.poly().substitute(images);
            Monomial stu(3);
            stu.e = {1, 1, 1};
            ok = expanded.coeff(stu) / 6 == f.polarize(a, b, c);
        }
        s.check(ok, "polarize agrees with coefficient expansion of f(sA+tB+uC)");
    }
    return s.ok;
}

bool suite_legendre(const LoadedInput& in, std::uint64_t seed, int den_bound,
                    std::ostream& out) {
    const CubicForm& f = in.form;
    SuiteRun s{out};
    const auto v1 = legendre::analyze(f, seed);
    const auto v2 = legendre::analyze(f, seed);
    const bool same = v1.status == v2.status &&
                      (!v1.fstar || v1.fstar->poly() == v2.fstar->poly());
    s.check(same, "determinism: same seed, same verdict");

    if (in.entry) {
        const auto& exp = in.entry->expected;
        if (exp.cone)
            s.check(v1.status == legendre::Status::Degenerate && v1.reason == "cone",
                    "expected Degenerate(cone)", v1.reason);
        else if (exp.is_ekp)
            s.check(v1.status == legendre::Status::Ekp, "expected EKP", v1.reason);
        else
            s.check(v1.status == legendre::Status::NotEkp, "expected NotEKP", v1.reason);
    }

    if (v1.status == legendre::Status::Ekp) {
        s.check(v1.certificates.all_exact(), "all three certificates exact");
        s.check(v1.fstar->poly().is_homogeneous(3), "deg f* = 3");

        // Scaling covariance: the fit of lambda·f certifies against
        // (lambda f)^2 for lambda in {2, -3}.
        bool scale_ok = true;
        for (long lam : {2L, -3L}) {
            CubicForm lf(f.poly() * make_rational(lam));
            const auto vl = legendre::analyze(lf, seed);
            if (vl.status != legendre::Status::Ekp) {
                scale_ok = false;
                break;
            }
            const Poly composed = vl.fstar->poly().substitute(lf.gradient());
            if (composed != lf.poly() * lf.poly()) scale_ok = false;
        }
        s.check(scale_ok, "scaling covariance for lambda in {2,-3}");
    }

    if (in.entry && in.entry->name == "triple_product") {
        // f composed with a fixed unimodular T stays EKP.
        const int n = f.vars();
        std::vector<Poly> images;
        // T = [[1,1,0],[0,1,1],[0,0,1]]
        images.push_back(Poly::variable(n, 0) + Poly::variable(n, 1));
        images.push_back(Poly::variable(n, 1) + Poly::variable(n, 2));
        images.push_back(Poly::variable(n, 2));
        CubicForm ft(f.poly().substitute(images));
        const auto vt = legendre::analyze(ft, seed);
        s.check(vt.status == legendre::Status::Ekp, "linear equivariance under unimodular T");
    }

    if (v1.status == legendre::Status::NotEkp) {
        auto fit = legendre::fit_rational_legendre(f, den_bound, seed);
        const bool expect_fit = in.entry && in.entry->name == "conic_tangent";
        if (expect_fit)
            s.check(fit.has_value() && fit->denominator_degree <= den_bound,
                    "certified rational transform found");
        else if (in.entry && in.entry->name == "fermat")
            s.check(!fit.has_value(), "no rational transform up to the bound");
        else if (fit)
            s.check(true, "rational transform found at denominator degree " +
                              std::to_string(fit->denominator_degree));
    }
    return s.ok;
}

bool suite_jordan(const LoadedInput& in, std::uint64_t seed, int trials, std::ostream& out) {
    const CubicForm& f = in.form;
    SuiteRun s{out};
    std::optional<Vec> unit =
        in.entry && in.entry->unit_point ? in.entry->unit_point : pick_unit_point(f, seed);
    if (!unit) {
        s.check(false, "no usable base point with f(I) != 0");
        return s.ok;
    }
    JordanStructure J = jordan_product(f, *unit);
    const std::optional<Vec>& witness =
        in.entry ? in.entry->singular_seed : std::optional<Vec>{};
    const JordanReport rep = jordan_verify(J, trials, seed, witness);
    for (const auto& c : rep.checks) s.check(c.pass, "jordan_verify: " + c.name, c.witness);

    const bool simple = simplicity_probe(J, 5, seed);
    static const std::map<std::string, bool> expected_simple = {
        {"herm3_R", true},  {"herm3_C", true}, {"herm3_H", true},
        {"herm3_O", true},  {"triple_product", false},
    };
    if (in.entry) {
        auto it = expected_simple.find(in.entry->name);
        if (it != expected_simple.end())
            s.check(simple == it->second,
                    std::string("simplicity probe = ") + (it->second ? "true" : "false"));
        else
            out << "  [info] simplicity probe: " << (simple ? "true" : "false") << "\n";
    } else {
        out << "  [info] simplicity probe: " << (simple ? "true" : "false") << "\n";
    }

    // phi derivative: the differential of A -> tau_I^{-1} tau_A(I) at I
    // is exactly -2·Id.
    s.check(phi_derivative_check(f, *unit), "phi derivative equals -2·Id");
    return s.ok;
}

bool suite_severi(const LoadedInput& in, std::uint64_t seed, std::ostream& out) {
    SuiteRun s{out};
    if (!in.entry) {
        out << "  [info] severi suite needs a catalog entry with expectations; skipped\n";
        return true;
    }
    if (!in.entry->singular_seed) {
        out << "  [info] no singular seed; severi suite skipped\n";
        return true;
    }
    const auto verdict = legendre::analyze(in.form, seed);
    if (verdict.status != legendre::Status::Ekp) {
        out << "  [info] entry is not EKP; severi suite skipped\n";
        return true;
    }
    const SeveriReport rep = severi_report(*in.entry, *verdict.fstar, seed);
    s.check(rep.tangent_dim_constant, "tangent dimension constant across orbit samples");
    s.check(rep.singular_dim_matches_expected,
            "singular dim = " + std::to_string(rep.singular_dim));
    if (rep.terracini_rank >= 0)
        s.check(rep.terracini_rank == in.entry->n - 1,
                "terracini rank = ambient affine dim - 1 = " + std::to_string(in.entry->n - 1),
                std::to_string(rep.terracini_rank));
    else
        out << "  [info] no independent singular pair; terracini skipped\n";
    s.check(rep.secant_in_X.pass, "secant membership", rep.secant_in_X.witness);
    s.check(rep.dual_inclusion.pass, "dual inclusion", rep.dual_inclusion.witness);
    s.check(rep.gauss_linear.pass, "gauss fibers linear (sampled)", rep.gauss_linear.witness);
    s.check(rep.orbit_closure.pass, "orbit images stay singular", rep.orbit_closure.witness);

    // tau identities on this entry.
    const CubicForm& f = in.form;
    Rng rng = Rng(seed).derive(0x74617573);
    bool tau_inv = true;
    for (int t = 0; t < 10 && tau_inv; ++t) {
        Vec a(f.vars());
        for (int i = 0; i < f.vars(); ++i) a[i] = rng.rational_in(-7, 7);
        if (cubic::is_zero(f.eval(a))) {
            --t;
            continue;
        }
        tau_inv = tau_inverse_check(f, *verdict.fstar, a);
    }
    s.check(tau_inv, "tau inverse identity at 10 random base points");

    bool geom = true;
    std::string geom_witness;
    for (int t = 0; t < 5 && geom; ++t) {
        Vec a(f.vars());
        for (int i = 0; i < f.vars(); ++i) a[i] = rng.rational_in(-7, 7);
        if (cubic::is_zero(f.eval(a))) {
            --t;
            continue;
        }
        if (cubic::is_zero(pair(f.grad_at(a), *in.entry->singular_seed))) {
            --t;
            continue;
        }
        const auto res = tau_geometric_check(f, a, *in.entry->singular_seed);
        if (!res.pass) {
            geom = false;
            geom_witness = "A with f(A)=" + rational_to_string(f.eval(a));
        }
    }
    s.check(geom, "tau geometric interpretation on admissible pairs", geom_witness);
    return s.ok;
}

int cmd_verify(const LoadedInput& in, const std::string& suite, std::uint64_t seed, int trials,
               int den_bound, std::ostream& out) {
    bool ok = true;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (!want("poly") && !want("legendre") && !want("jordan") && !want("severi"))
        throw CLI::ValidationError("--suite must be poly|legendre|jordan|severi|all");
    if (want("poly")) {
        out << "suite poly (" << in.name << ")\n";
        ok = suite_poly(in, seed, out) && ok;
    }
    if (want("legendre")) {
        out << "suite legendre (" << in.name << ")\n";
        ok = suite_legendre(in, seed, den_bound, out) && ok;
    }
    if (want("jordan")) {
        out << "suite jordan (" << in.name << ")\n";
        const auto v = legendre::analyze(in.form, seed);
        if (v.status == legendre::Status::Ekp) {
            ok = suite_jordan(in, seed, trials, out) && ok;
        } else {
            out << "  [info] not EKP; jordan suite skipped\n";
        }
    }
    if (want("severi")) {
        out << "suite severi (" << in.name << ")\n";
        ok = suite_severi(in, seed, out) && ok;
    }
    out << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of cubic forms: EKP transforms, Jordan structures, "
                 "singular loci"};
    app.require_subcommand(1);

    std::string path, catalog_name, suite = "all", out_path;
    std::uint64_t seed = 42;
    int trials = 20, den_bound = 6, vars = 0, samples = 10;
    bool json = false, timings = false, jordan_tensor = false;

    auto add_common = [&](CLI::App* c, bool with_input) {
        if (with_input) {
            c->add_option("input", path, "polynomial file or catalog entry name");
            c->add_option("--catalog", catalog_name, "built-in catalog entry name");
            c->add_option("--vars", vars, "minimum ambient variable count for file input");
        }
        c->add_option("--seed", seed, "random seed (default 42)");
        c->add_flag("--json", json, "machine-readable output");
    };

    CLI::App* a_analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
    add_common(a_analyze, true);
    a_analyze->add_option("--trials", trials, "verification trials (default 20)");
    a_analyze->add_option("--denominator-bound", den_bound,
                          "max denominator degree for the rational transform search");
    a_analyze->add_option("--samples", samples,
                          "orbit sample count for the singular-locus battery (default 10)");
    a_analyze->add_flag("--jordan-tensor", jordan_tensor,
                        "include the full structure-constant tensor in JSON output");
    a_analyze->add_option("--out", out_path, "write the report to a file");
    a_analyze->add_flag("--timings", timings, "include wall-clock timings in the report");

    CLI::App* a_catalog = app.add_subcommand("catalog", "list the built-in catalog");
    add_common(a_catalog, false);

    CLI::App* a_verify = app.add_subcommand("verify", "run invariant suites");
    add_common(a_verify, true);
    a_verify->add_option("--suite", suite, "poly|legendre|jordan|severi|all");
    a_verify->add_option("--trials", trials, "verification trials (default 20)");
    a_verify->add_option("--denominator-bound", den_bound, "rational search bound");

    CLI::App* a_export = app.add_subcommand("export", "print a catalog entry as text");
    add_common(a_export, true);
    a_export->add_option("--out", out_path, "write to a file");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const auto cat = builtin_catalog();
        if (a_catalog->parsed()) return cmd_catalog(cat, json, out);
        LoadedInput in = load_input(cat, path, catalog_name, vars);
        if (a_analyze->parsed())
            return cmd_analyze(in, seed, trials, den_bound, json, timings, samples,
                               jordan_tensor, out_path, out);
        if (a_verify->parsed()) return cmd_verify(in, suite, seed, trials, den_bound, out);
        if (a_export->parsed()) {
            const std::string text = in.form.poly().to_string() + "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw std::runtime_error("cannot write: " + out_path);
                f << text;
            } else {
                out << text;
            }
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
            << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cubic::cli
