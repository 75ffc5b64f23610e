#include "cubic/severi.hpp"

#include <stdexcept>

#include "cubic/rng.hpp"
#include "cubic/tau.hpp"

namespace cubic {

bool is_singular(const CubicForm& f, const Vec& z) {
    if (z.is_zero()) throw std::invalid_argument("is_singular: zero vector");
    const int n = f.vars();
    const Covec g = f.grad_at(z);
    bool by_gradient = g.is_zero();
    // Q(e_i, z, z) = f'(z)_i / 3; computed independently via polarize.
    bool by_polarization = true;
    for (int i = 0; i < n; ++i)
        if (!cubic::is_zero(f.polarize(Vec::unit(n, i), z, z))) {
            by_polarization = false;
            break;
        }
    if (by_gradient != by_polarization)
        throw std::logic_error("is_singular: gradient and polarization disagree");
    return by_gradient;
}

namespace {

Vec random_off_hypersurface_point(const CubicForm& f, Rng& rng) {
    const int n = f.vars();
    for (int tries = 0; tries < 10000; ++tries) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.rational_in(-7, 7);
        if (!cubic::is_zero(f.eval(v))) return v;
    }
    throw std::runtime_error("severi: could not sample f != 0");
}

std::vector<Vec> hessian_kernel(const CubicForm& f, const Vec& z) {
    auto basis = kernel_basis(f.hess_at(z));
    std::vector<Vec> out;
    out.reserve(basis.size());
    for (auto& b : basis) out.push_back(Vec(std::move(b)));
    return out;
}

bool linearly_independent_from(const std::vector<SingularSample>& samples, const Vec& cand) {
    // Pairwise independence: no existing point is proportional to cand.
    for (const auto& s : samples) {
        const Vec& p = s.point;
        bool proportional = true;
        for (std::size_t i = 0; i < p.dim() && proportional; ++i)
            for (std::size_t j = i + 1; j < p.dim(); ++j)
                if (p[i] * cand[j] != p[j] * cand[i]) {
                    proportional = false;
                    break;
                }
        if (proportional) return false;
    }
    return true;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += rational_to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::vector<SingularSample> singular_samples(const CubicForm& f, const Vec& seed_z, int count,
                                             std::uint64_t seed) {
    if (!is_singular(f, seed_z))
        throw std::invalid_argument("singular_samples: seed is not singular");
    Rng rng = Rng(seed).derive(0x736d706c);
    std::vector<SingularSample> out;
    // Pairwise independence is best-effort: when the singular locus is
    // zero-dimensional (triple_product) every orbit image of the seed is
    // proportional to it, so after a bounded number of rejections a
    // dependent sample is accepted rather than stalling.
    int dependent_rejections = 0;
    while (static_cast<int>(out.size()) < count) {
        const Vec a1 = random_off_hypersurface_point(f, rng);
        const Vec a2 = random_off_hypersurface_point(f, rng);
        const QMatrix g = singular_orbit_map(f, a1, a2);
        Vec img = g * seed_z;
        if (img.is_zero()) continue;
        // Occasional rational rescaling keeps sample heights varied.
        if (rng.uniform(0, 3) == 0) img = rng.rational_in(1, 5) * img;
        if (!is_singular(f, img))
            throw std::logic_error(
                "singular_samples: orbit image is not singular; witness point " + vec_str(img));
        if (!linearly_independent_from(out, img) && ++dependent_rejections <= 30) continue;
        out.push_back(SingularSample{img, hessian_kernel(f, img)});
    }
    return out;
}

int tangent_dimension(const CubicForm& f, const Vec& z) {
    if (!is_singular(f, z))
        throw std::invalid_argument("tangent_dimension: point is not singular");
    return f.vars() - rank(f.hess_at(z));
}

int terracini_rank(const CubicForm& f, const Vec& z1, const Vec& z2) {
    if (!is_singular(f, z1) || !is_singular(f, z2))
        throw std::invalid_argument("terracini_rank: both points must be singular");
    {
        bool proportional = true;
        for (std::size_t i = 0; i < z1.dim() && proportional; ++i)
            for (std::size_t j = i + 1; j < z1.dim(); ++j)
                if (z1[i] * z2[j] != z1[j] * z2[i]) {
                    proportional = false;
                    break;
                }
        if (proportional)
            throw std::invalid_argument("terracini_rank: points are linearly dependent");
    }
    const auto k1 = hessian_kernel(f, z1);
    const auto k2 = hessian_kernel(f, z2);
    QMatrix stacked(static_cast<int>(k1.size() + k2.size()), f.vars());
    int r = 0;
    for (const auto& v : k1) {
        for (int j = 0; j < f.vars(); ++j) stacked.at(r, j) = v[j];
        ++r;
    }
    for (const auto& v : k2) {
        for (int j = 0; j < f.vars(); ++j) stacked.at(r, j) = v[j];
        ++r;
    }
    return rank(stacked);
}

bool secant_membership(const CubicForm& f, const Vec& z1, const Vec& z2) {
    if (!is_singular(f, z1) || !is_singular(f, z2))
        throw std::invalid_argument("secant_membership: both points must be singular");
    return cubic::is_zero(f.eval(z1 + z2));
}

bool dual_inclusion_check(const CubicForm& f, const CubicForm& fstar, const Vec& x) {
    if (!cubic::is_zero(f.eval(x)))
        throw PreconditionError(PreconditionError::Code::BasePointOnHypersurface,
                                "dual_inclusion_check: f(x) != 0");
    const Covec g = f.grad_at(x);
    if (g.is_zero())
        throw PreconditionError(PreconditionError::Code::PointNotSingular,
                                "dual_inclusion_check: x is singular");
    Vec image(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) image[i] = g[i];
    return fstar.grad_at(image).is_zero();
}

bool gauss_fiber_check(const CubicForm& f, const Vec& x, int trials) {
    if (!cubic::is_zero(f.eval(x)))
        throw PreconditionError(PreconditionError::Code::BasePointOnHypersurface,
                                "gauss_fiber_check: f(x) != 0");
    const Covec gx = f.grad_at(x);
    if (gx.is_zero())
        throw PreconditionError(PreconditionError::Code::PointNotSingular,
                                "gauss_fiber_check: x is singular");
    const int n = f.vars();
    const auto kernel = hessian_kernel(f, x);
    const long ts[] = {1, -1, 2, -2};  // four points pin a cubic in t
    int checked = 0;
    for (const auto& v : kernel) {
        if (trials > 0 && checked >= trials) break;
        ++checked;
        for (long tv : ts) {
            const Vec y = x + make_rational(tv) * v;
            if (!cubic::is_zero(f.eval(y))) return false;
            const Covec gy = f.grad_at(y);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (gy[i] * gx[j] != gy[j] * gx[i]) return false;
        }
    }
    return true;
}

std::vector<Vec> smooth_points_on_hypersurface(const CubicForm& f, const Vec& singular_seed,
                                               int count, std::uint64_t seed) {
    Rng rng = Rng(seed).derive(0x736d6f74);
    std::vector<Vec> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 100 * count + 100)
            throw std::runtime_error("smooth point construction stalled");
        const Vec a = random_off_hypersurface_point(f, rng);
        const Rational fa = f.eval(a);
        const Rational pairing = pair(f.grad_at(a), singular_seed);
        if (cubic::is_zero(pairing)) continue;
        const Vec zp = a - (fa / pairing) * singular_seed;
        if (!cubic::is_zero(f.eval(zp))) continue;  // exact by construction; guard anyway
        if (f.grad_at(zp).is_zero()) continue;
        out.push_back(zp);
    }
    return out;
}

SeveriReport severi_report(const CatalogEntry& entry, const CubicForm& fstar,
                           std::uint64_t seed, int sample_count) {
    const CubicForm& f = entry.form;
    SeveriReport rep;
    rep.ambient_dim = entry.n - 1;
    if (!entry.singular_seed) {
        rep.findings.push_back("no singular seed shipped with this entry");
        return rep;
    }
    const Vec& seed_z = *entry.singular_seed;
    std::vector<SingularSample> samples;
    try {
        samples = singular_samples(f, seed_z, std::max(sample_count, 2), seed);
    } catch (const std::logic_error& e) {
        // An orbit image failing the singularity assertion is a finding,
        // not a crash; the witness rides along in the message.
        rep.orbit_closure = {false, true, e.what()};
        rep.findings.push_back(e.what());
        return rep;
    }
    rep.samples = static_cast<int>(samples.size());

    // Dimension: kernel rank at the seed and at every orbit sample; rank
    // constancy across samples is the empirical smoothness check.
    const int dim0 = tangent_dimension(f, seed_z);
    rep.tangent_dim_constant = true;
    for (const auto& s : samples)
        if (static_cast<int>(s.tangent.size()) != dim0) {
            rep.tangent_dim_constant = false;
            rep.findings.push_back("tangent dimension jumps at " + vec_str(s.point));
            break;
        }
    rep.singular_dim = dim0 - 1;
    if (entry.expected.singular_dim && *entry.expected.singular_dim != rep.singular_dim) {
        rep.singular_dim_matches_expected = false;
        rep.findings.push_back("singular dimension " + std::to_string(rep.singular_dim) +
                               " != expected " + std::to_string(*entry.expected.singular_dim));
    }

    // Orbit closure: every sample stays singular (asserted inside
    // singular_samples; recurred here as a reportable outcome).
    rep.orbit_closure = {true, true, ""};

    // Terracini rank over independent sample pairs; a zero-dimensional
    // singular locus may never produce one (orbit images of the seed all
    // proportional), which is informational, not a finding.
    bool have_pair = false;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            if (!linearly_independent_from({samples[i]}, samples[j].point)) continue;
            const int r = terracini_rank(f, samples[i].point, samples[j].point);
            if (!have_pair) {
                rep.terracini_rank = r;
                have_pair = true;
            } else if (r != rep.terracini_rank) {
                rep.findings.push_back("terracini rank varies across generic pairs: " +
                                       std::to_string(r) + " vs " +
                                       std::to_string(rep.terracini_rank));
            }
        }
    }

    // Secant membership on all sample pairs.
    rep.secant_in_X = {true, true, ""};
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i; j < samples.size(); ++j)
            if (!secant_membership(f, samples[i].point, samples[j].point)) {
                rep.secant_in_X.pass = false;
                rep.secant_in_X.witness =
                    vec_str(samples[i].point) + " + " + vec_str(samples[j].point);
                break;
            }

    // Smooth points feed the dual-inclusion and Gauss-fiber checks.
    std::vector<Vec> smooth;
    try {
        smooth = smooth_points_on_hypersurface(f, seed_z, 3, splitmix64(seed ^ 0x77));
    } catch (const std::runtime_error& e) {
        rep.findings.push_back(std::string("smooth point construction: ") + e.what());
        return rep;
    }
    rep.dual_inclusion = {true, true, ""};
    rep.gauss_linear = {true, true, ""};
    for (const auto& x : smooth) {
        if (!dual_inclusion_check(f, fstar, x)) {
            rep.dual_inclusion.pass = false;
            rep.dual_inclusion.witness = vec_str(x);
        }
        if (!gauss_fiber_check(f, x, 0)) {
            rep.gauss_linear.pass = false;
            rep.gauss_linear.witness = vec_str(x);
        }
    }
    return rep;
}

}  // namespace cubic
