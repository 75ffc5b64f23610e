#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubic/catalog.hpp"
#include "cubic/cubic_form.hpp"

namespace cubic {

// Exact point on the affine cone over Sing V(f) together with a basis of
// ker Hess f at it (the affine tangent space under the smoothness
// contract).
struct SingularSample {
    Vec point;
    std::vector<Vec> tangent;
};

// True iff f'(z) = 0; both the gradient evaluation and the polarization
// slice Q(e_i, z, z) are computed and compared. Throws on z = 0.
bool is_singular(const CubicForm& f, const Vec& z);

// Orbit sampling: images of seed_z under tau_{f,A2}^{-1} tau_{f,A1} for
// seeded random base points, plus rational rescalings. Every output is
// asserted singular (a failure here would be a finding, reported via
// exception with the witness) and outputs are pairwise independent.
std::vector<SingularSample> singular_samples(const CubicForm& f, const Vec& seed_z, int count,
                                             std::uint64_t seed);

// dim ker Hess f(z), the affine tangent dimension; the projective
// dimension of Z is this minus one.
int tangent_dimension(const CubicForm& f, const Vec& z);

// rank of T_z1 + T_z2 inside the affine cone (Terracini).
int terracini_rank(const CubicForm& f, const Vec& z1, const Vec& z2);

// f(z1 + z2) = 0 for singular z1, z2; forced by the polarization
// expansion, so this is a consistency check of the implementation chain.
bool secant_membership(const CubicForm& f, const Vec& z1, const Vec& z2);

// For a smooth point x of V(f): whether grad fstar vanishes at f'(x),
// i.e. the polar image of x lands in Sing V(fstar).
bool dual_inclusion_check(const CubicForm& f, const CubicForm& fstar, const Vec& x);

// Contact-locus linearity at a smooth x: along each kernel direction v
// of Hess f(x), f(x + t v) = 0 at four t values (a cubic in t, hence
// identically) and f'(x + t v) stays proportional to f'(x).
bool gauss_fiber_check(const CubicForm& f, const Vec& x, int trials);

struct CheckOutcome {
    bool pass = false;
    bool ran = false;
    std::string witness;
};

struct SeveriReport {
    int singular_dim = -1;  // projective
    int ambient_dim = -1;   // projective
    int terracini_rank = -1;
    int samples = 0;
    bool tangent_dim_constant = false;
    bool singular_dim_matches_expected = true;
    CheckOutcome dual_inclusion;
    CheckOutcome secant_in_X;
    CheckOutcome gauss_linear;  // sampled check, finitely many fibers
    CheckOutcome orbit_closure;
    std::vector<std::string> findings;

    bool all_pass() const {
        return tangent_dim_constant && singular_dim_matches_expected && dual_inclusion.pass &&
               secant_in_X.pass && gauss_linear.pass && orbit_closure.pass && findings.empty();
    }
};

// Full battery for a certified-EKP catalog entry with a singular seed:
// orbit samples, dimensions, Terracini, secant, dual inclusion, Gauss
// fibers. Mismatches are reported findings, never exceptions.
SeveriReport severi_report(const CatalogEntry& entry, const CubicForm& fstar,
                           std::uint64_t seed, int sample_count = 10);

// Smooth rational points of V(f) built from singular samples via the
// z' = A - (f(A)/f'(A)(z))·z construction.
std::vector<Vec> smooth_points_on_hypersurface(const CubicForm& f, const Vec& singular_seed,
                                               int count, std::uint64_t seed);

}  // namespace cubic
