#include "cubic/legendre.hpp"

#include <array>
#include <functional>

#include "cubic/linalg.hpp"
#include "cubic/modular.hpp"

namespace cubic::legendre {

PolarMap polar_map(const CubicForm& f) { return {f.gradient()}; }

std::string status_name(Status s) {
    switch (s) {
        case Status::Ekp: return "EKP";
        case Status::NotEkp: return "NotEKP";
        case Status::Degenerate: return "Degenerate";
    }
    return "?";
}

namespace {

constexpr long kRejectionBudget = 200000;

// Seed tags for the independent random streams of one invocation.
enum : std::uint64_t {
    kTagSamples = 0x73616d70,
    kTagLogHess = 0x6c6f6768,
    kTagFit = 0x66697430,
    kTagBidual = 0x62696475,
    kTagRational = 0x72617466,
};

}  // namespace

bool log_hessian_nondegenerate(const CubicForm& f, std::uint64_t seed) {
    const int n = f.vars();
    Rng rng = Rng(seed).derive(kTagLogHess);
    // det of f·Hess f - grad ⊗ grad has degree <= 4n, so a nonzero
    // polynomial vanishes at a random point of the box with probability
    // <= 4n / 2e6; eight zero samples settle the negative answer.
    for (int trial = 0; trial < 8; ++trial) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.rational_in(-1000000, 1000000);
        const Rational fx = f.eval(x);
        const QMatrix h = f.hess_at(x);
        const Covec g = f.grad_at(x);
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = fx * h.at(i, j) - g[i] * g[j];
        if (sgn(determinant(m)) != 0) return true;
    }
    return false;
}

std::vector<Vec> sample_off_hypersurface(const CubicForm& f, int count, std::uint64_t seed) {
    const int n = f.vars();
    Rng rng = Rng(seed).derive(kTagSamples);
    std::vector<Vec> out;
    out.reserve(count);
    long rejections = 0;
    while (static_cast<int>(out.size()) < count) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.rational_in(-7, 7);
        if (cubic::is_zero(f.eval(x))) {
            if (++rejections > kRejectionBudget)
                throw SampleError("sampling box exhausted: f vanishes on nearly all of [-7,7]^n");
            continue;
        }
        out.push_back(std::move(x));
    }
    return out;
}

namespace detail {

std::vector<Monomial> monomial_basis(int n, int d) {
    std::vector<Monomial> out;
    Monomial cur(n);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur.e[pos] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur.e[pos] = static_cast<std::uint8_t>(k);
            rec(pos + 1, left - k);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return graded_lex_less(b, a); });
    return out;
}

namespace {

struct SampleCache {
    std::vector<Vec> points;
    std::vector<Covec> grads;
    std::vector<Rational> rhs;  // f(x)^2
};

SampleCache build_samples(const CubicForm& f, long count, std::uint64_t seed) {
    SampleCache sc;
    auto pts = sample_off_hypersurface(f, static_cast<int>(count), seed);
    sc.points.reserve(pts.size());
    sc.grads.reserve(pts.size());
    sc.rhs.reserve(pts.size());
    for (auto& x : pts) {
        sc.grads.push_back(f.grad_at(x));
        const Rational fx = f.eval(x);
        sc.rhs.push_back(fx * fx);
        sc.points.push_back(std::move(x));
    }
    return sc;
}

// Index triples i <= j <= k for each cubic basis monomial.
std::vector<std::array<int, 3>> basis_triples(const std::vector<Monomial>& basis) {
    std::vector<std::array<int, 3>> out;
    out.reserve(basis.size());
    for (const auto& m : basis) {
        std::array<int, 3> t{};
        int pos = 0;
        for (std::size_t v = 0; v < m.e.size(); ++v)
            for (int rep = 0; rep < m.e[v]; ++rep) t[pos++] = static_cast<int>(v);
        out.push_back(t);
    }
    return out;
}

Poly poly_from_coeffs(int n, const std::vector<Monomial>& basis,
                      const std::vector<Rational>& coeffs) {
    std::vector<Poly::Term> ts;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!cubic::is_zero(coeffs[i])) ts.emplace_back(basis[i], coeffs[i]);
    return Poly::from_terms(n, std::move(ts));
}

}  // namespace

FitOutcome solve_interpolation(const CubicForm& f, std::uint64_t seed, SolveMode mode) {
    const int n = f.vars();
    const auto basis = monomial_basis(n, 3);
    const auto triples = basis_triples(basis);
    const int N = static_cast<int>(basis.size());
    constexpr int kExactThreshold = 120;
    constexpr int kSubsystemExactBound = 512;
    const bool exact = mode == SolveMode::Exact || (mode == SolveMode::Auto && N <= kExactThreshold);

    // At least 2N equations plus 25 holdouts; every generated sample is
    // verified exactly against the final candidate.
    const long total_samples = 2L * N + 25;
    SampleCache sc = build_samples(f, total_samples, seed);

    FitOutcome out;
    out.kind = FitOutcome::Kind::Failed;
    out.unknowns = N;
    out.samples_used = total_samples;

    auto verify_all = [&](const Poly& g) {
        for (std::size_t i = 0; i < sc.grads.size(); ++i)
            if (g.eval(sc.grads[i].c) != sc.rhs[i]) return false;
        return true;
    };

    if (exact) {
        const long rows_n = 2L * N;
        QMatrix M(static_cast<int>(rows_n), N);
        std::vector<Rational> b(rows_n);
        for (long r = 0; r < rows_n; ++r) {
            const auto& u = sc.grads[r];
            for (int c = 0; c < N; ++c) {
                const auto& [i, j, k] = triples[c];
                M.at(static_cast<int>(r), c) = u[i] * u[j] * u[k];
            }
            b[r] = sc.rhs[r];
        }
        LinearSolution s = solve_linear(M, b);
        out.rank = s.rank;
        if (s.kind == LinearSolution::Kind::Inconsistent) {
            out.kind = FitOutcome::Kind::Inconsistent;
            out.exact_inconsistency = true;
            out.detail = "exact";
            return out;
        }
        if (s.kind == LinearSolution::Kind::Affine) {
            out.kind = FitOutcome::Kind::Underdetermined;
            out.detail = "interpolation system underdetermined";
            return out;
        }
        Poly g = poly_from_coeffs(n, basis, s.particular);
        if (!verify_all(g)) {
            // The unique solution of the sampled system fails a fresh
            // exact equation, so the full identity has no solution.
            out.kind = FitOutcome::Kind::Inconsistent;
            out.exact_inconsistency = true;
            out.detail = "exact (holdout contradiction)";
            return out;
        }
        out.kind = FitOutcome::Kind::Solved;
        out.solution = std::move(g);
        return out;
    }

    // Modular path: row echelon per 31-bit prime, CRT + rational
    // reconstruction, exact verification at every sample. Full column
    // rank mod any prime certifies uniqueness over Q.
    auto row_mod = [&](long idx, const Barrett& bar) -> std::optional<std::vector<std::uint32_t>> {
        const auto& u = sc.grads[idx];
        std::vector<std::uint32_t> um(n);
        for (int i = 0; i < n; ++i) {
            auto m = mod_reduce(u[i], bar.p());
            if (!m) return std::nullopt;
            um[i] = *m;
        }
        std::vector<std::uint32_t> row(N + 1);
        for (int c = 0; c < N; ++c) {
            const auto& [i, j, k] = triples[c];
            row[c] = bar.mul(bar.mul(um[i], um[j]), um[k]);
        }
        auto r = mod_reduce(sc.rhs[idx], bar.p());
        if (!r) return std::nullopt;
        row[N] = *r;
        return row;
    };

    // Exact consistency check of the subsystem the contradiction came from.
    auto exact_subsystem_inconsistent = [&](std::vector<int> tags) {
        QMatrix M(static_cast<int>(tags.size()), N);
        std::vector<Rational> b(tags.size());
        for (std::size_t r = 0; r < tags.size(); ++r) {
            const auto& u = sc.grads[tags[r]];
            for (int c = 0; c < N; ++c) {
                const auto& [i, j, k] = triples[c];
                M.at(static_cast<int>(r), c) = u[i] * u[j] * u[k];
            }
            b[r] = sc.rhs[tags[r]];
        }
        return solve_linear(M, b).kind == LinearSolution::Kind::Inconsistent;
    };

    constexpr int kMaxPrimes = 10;
    CrtReconstructor crt(N);
    int inconsistent_votes = 0;
    int stalled_votes = 0;
    for (int pi = 0; pi < kMaxPrimes; ++pi) {
        const Barrett bar(kSolvePrimes[pi]);
        ModEchelon ech(bar, N, /*augmented=*/true);
        bool inconsistent_here = false;
        for (long idx = 0; idx < total_samples && !ech.full_column_rank(); ++idx) {
            auto row = row_mod(idx, bar);
            if (!row) continue;  // prime divides a denominator; skip sample
            const auto fate = ech.add_row(std::move(*row), static_cast<int>(idx));
            if (fate == ModEchelon::RowFate::Inconsistent) {
                if (N <= kSubsystemExactBound) {
                    auto tags = ech.pivot_tags();
                    tags.push_back(ech.inconsistent_tag());
                    if (exact_subsystem_inconsistent(std::move(tags))) {
                        out.kind = FitOutcome::Kind::Inconsistent;
                        out.exact_inconsistency = true;
                        out.detail = "exact (modular subsystem, confirmed)";
                        out.rank = ech.rank();
                        return out;
                    }
                    // Unlucky prime; restart with the next one.
                } else {
                    ++inconsistent_votes;
                }
                inconsistent_here = true;
                break;
            }
        }
        if (inconsistent_here) {
            if (inconsistent_votes >= 2) {
                out.kind = FitOutcome::Kind::Inconsistent;
                out.exact_inconsistency = false;
                out.detail = "modular evidence, 2 primes";
                return out;
            }
            continue;
        }
        if (!ech.full_column_rank()) {
            if (++stalled_votes >= 2) {
                out.kind = FitOutcome::Kind::Underdetermined;
                out.detail = "rank " + std::to_string(ech.rank()) + " of " + std::to_string(N) +
                             " mod two primes";
                out.rank = ech.rank();
                return out;
            }
            continue;
        }
        out.rank = N;  // nonzero pivot minor mod p is nonzero over Q
        crt.add_prime(bar.p(), ech.solve_unique());
        out.primes_used = pi + 1;
        auto cand = crt.reconstruct();
        if (!cand) continue;
        Poly g = poly_from_coeffs(n, basis, *cand);
        if (verify_all(g)) {
            out.kind = FitOutcome::Kind::Solved;
            out.solution = std::move(g);
            return out;
        }
    }
    out.detail = "rational reconstruction did not converge";
    return out;
}

}  // namespace detail

namespace {

LegendreVerdict fit_with_certificates(const CubicForm& f, std::uint64_t seed) {
    LegendreVerdict v;
    auto out = detail::solve_interpolation(f, splitmix64(seed ^ kTagFit));
    v.unknowns = out.unknowns;
    v.rank = out.rank;
    v.samples_used = out.samples_used;
    v.primes_used = out.primes_used;
    switch (out.kind) {
        case detail::FitOutcome::Kind::Inconsistent:
            v.status = Status::NotEkp;
            v.reason = "interpolation inconsistent (" + out.detail + ")";
            v.certificates.value = "inconsistent (" + out.detail + ")";
            return v;
        case detail::FitOutcome::Kind::Underdetermined:
            v.status = Status::Degenerate;
            v.reason = "interpolation underdetermined: " + out.detail;
            return v;
        case detail::FitOutcome::Kind::Failed:
            v.status = Status::Degenerate;
            v.reason = out.detail;
            return v;
        case detail::FitOutcome::Kind::Solved:
            break;
    }

    // (a) value certificate: g(f'(x)) = f(x)^2 as a polynomial identity.
    const Poly fsq = f.poly() * f.poly();
    const bool value_ok = out.solution.substitute(f.gradient()) == fsq;
    // (b) gradient certificate: dg/du_i composed with f' equals f(x)·x_i.
    bool gradient_ok = true;
    for (int i = 0; i < f.vars() && gradient_ok; ++i) {
        const Poly lhs = out.solution.derivative(i).substitute(f.gradient());
        const Poly rhs = f.poly() * Poly::variable(f.vars(), i);
        gradient_ok = lhs == rhs;
    }
    v.certificates.value = value_ok ? "exact" : "failed";
    v.certificates.gradient = gradient_ok ? "exact" : "failed";
    if (!value_ok || !gradient_ok) {
        v.status = Status::NotEkp;
        v.reason = "symbolic certificate failed";
        return v;
    }

    // (c) biduality: the same fit on g must return f itself.
    auto back = detail::solve_interpolation(CubicForm(out.solution),
                                            splitmix64(seed ^ kTagBidual));
    const bool bidual_ok =
        back.kind == detail::FitOutcome::Kind::Solved && back.solution == f.poly();
    v.certificates.biduality = bidual_ok ? "exact" : "failed";
    if (!bidual_ok) {
        v.status = Status::NotEkp;
        v.reason = "biduality certificate failed";
        return v;
    }

    v.status = Status::Ekp;
    v.fstar = CubicForm(out.solution);
    return v;
}

}  // namespace

LegendreVerdict fit_polynomial_legendre(const CubicForm& f, std::uint64_t seed) {
    if (f.cone_direction())
        throw std::domain_error("fit_polynomial_legendre: input is a cone");
    if (!log_hessian_nondegenerate(f, seed))
        throw std::domain_error("fit_polynomial_legendre: log-Hessian identically degenerate");
    return fit_with_certificates(f, seed);
}

LegendreVerdict analyze(const CubicForm& f, std::uint64_t seed) {
    LegendreVerdict v;
    if (auto cw = f.cone_direction()) {
        v.status = Status::Degenerate;
        v.reason = "cone";  // a cone is never homaloidal
        v.cone_witness = std::move(cw);
        return v;
    }
    if (!log_hessian_nondegenerate(f, seed)) {
        v.status = Status::Degenerate;
        v.reason = "log-Hessian identically degenerate";
        return v;
    }
    return fit_with_certificates(f, seed);
}

std::optional<RationalFit> fit_rational_legendre(const CubicForm& f, int max_den_degree,
                                                 std::uint64_t seed) {
    if (!log_hessian_nondegenerate(f, seed))
        throw std::domain_error("fit_rational_legendre: log-Hessian identically degenerate");
    const int n = f.vars();
    const Poly fsq = f.poly() * f.poly();

    // q = 0 is the polynomial case with a constant denominator.
    {
        auto out = detail::solve_interpolation(f, splitmix64(seed ^ kTagFit));
        if (out.kind == detail::FitOutcome::Kind::Solved &&
            out.solution.substitute(f.gradient()) == fsq)
            return RationalFit{out.solution, Poly::constant(n, make_rational(1)), 0};
    }

    for (int q = 1; q <= max_den_degree; ++q) {
        const auto basis_p = detail::monomial_basis(n, q + 3);
        const auto basis_q = detail::monomial_basis(n, q);
        const int np = static_cast<int>(basis_p.size());
        const int nq = static_cast<int>(basis_q.size());
        const int unknowns = np + nq;
        if (unknowns > 600) break;  // exact kernel solve bound; CLI warns

        auto samples = sample_off_hypersurface(f, 2 * unknowns + 10,
                                               splitmix64(seed ^ (kTagRational + q)));
        QMatrix M(static_cast<int>(samples.size()), unknowns);
        for (std::size_t r = 0; r < samples.size(); ++r) {
            const Covec u = f.grad_at(samples[r]);
            const Rational fx = f.eval(samples[r]);
            const Rational v = fx * fx;
            for (int c = 0; c < np; ++c)
                M.at(static_cast<int>(r), c) = Poly::from_term(n, basis_p[c], make_rational(1)).eval(u.c);
            for (int c = 0; c < nq; ++c)
                M.at(static_cast<int>(r), np + c) =
                    -v * Poly::from_term(n, basis_q[c], make_rational(1)).eval(u.c);
        }
        auto kernel = kernel_basis(M);
        auto try_candidate = [&](const std::vector<Rational>& kv) -> std::optional<RationalFit> {
            std::vector<Rational> pc(kv.begin(), kv.begin() + np);
            std::vector<Rational> qc(kv.begin() + np, kv.end());
            Poly P = Poly::from_terms(n, [&] {
                std::vector<Poly::Term> ts;
                for (int i = 0; i < np; ++i)
                    if (!cubic::is_zero(pc[i])) ts.emplace_back(basis_p[i], pc[i]);
                return ts;
            }());
            Poly Q = Poly::from_terms(n, [&] {
                std::vector<Poly::Term> ts;
                for (int i = 0; i < nq; ++i)
                    if (!cubic::is_zero(qc[i])) ts.emplace_back(basis_q[i], qc[i]);
                return ts;
            }());
            if (Q.is_zero()) return std::nullopt;
            const Poly qcomp = Q.substitute(f.gradient());
            if (qcomp.is_zero()) return std::nullopt;
            if (qcomp * fsq != P.substitute(f.gradient())) return std::nullopt;
            // Normalize so Q has leading coefficient 1.
            const Rational lead = Q.terms().front().second;
            return RationalFit{P * (1 / lead), Q * (1 / lead), q};
        };
        for (const auto& kv : kernel)
            if (auto fit = try_candidate(kv)) return fit;
        if (kernel.size() > 1) {
            std::vector<Rational> sum(unknowns, Rational(0));
            for (const auto& kv : kernel)
                for (int i = 0; i < unknowns; ++i) sum[i] += kv[i];
            if (auto fit = try_candidate(sum)) return fit;
        }
    }
    return std::nullopt;
}

}  // namespace cubic::legendre
