#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/cubic_form.hpp"
#include "cubic/rng.hpp"

namespace cubic::legendre {

inline constexpr std::uint64_t kDefaultSeed = 42;

// The polar map x -> f'(x), one degree-2 component per coordinate.
struct PolarMap {
    std::vector<Poly> components;
};

PolarMap polar_map(const CubicForm& f);

struct Certificates {
    // Each is "exact", "failed", or "not run".
    std::string value = "not run";
    std::string gradient = "not run";
    std::string biduality = "not run";

    bool all_exact() const {
        return value == "exact" && gradient == "exact" && biduality == "exact";
    }
};

enum class Status { Ekp, NotEkp, Degenerate };

std::string status_name(Status s);

// Outcome of the EKP decision pipeline. An Ekp status always carries
// fstar and all three certificates marked exact.
struct LegendreVerdict {
    Status status = Status::Degenerate;
    std::optional<CubicForm> fstar;
    std::string reason;
    Certificates certificates;
    std::optional<Vec> cone_witness;
    int unknowns = 0;
    int rank = 0;
    long samples_used = 0;
    int primes_used = 0;  // 0 when the exact path solved the system
};

// Homogeneous numerator/denominator pair representing a rational
// multiplicative Legendre transform P/Q with deg P - deg Q = 3.
struct RationalFit {
    Poly numerator;
    Poly denominator;
    int denominator_degree = 0;
};

struct SampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff det(f·Hess f - grad f ⊗ grad f) is not the zero polynomial.
// A nonzero value at any sample certifies the answer; the negative is
// settled by Schwartz-Zippel sampling over a wide integer box.
bool log_hessian_nondegenerate(const CubicForm& f, std::uint64_t seed = kDefaultSeed);

// Deterministic integer points with f(x) != 0, coordinates in [-7, 7].
// Throws SampleError when rejection sampling exhausts its budget.
std::vector<Vec> sample_off_hypersurface(const CubicForm& f, int count, std::uint64_t seed);

// Fits a cubic form g on V* with g(f'(x)) = f(x)^2, then certifies the
// value, gradient and biduality identities symbolically. Throws
// std::domain_error when f is a cone or log-degenerate.
LegendreVerdict fit_polynomial_legendre(const CubicForm& f, std::uint64_t seed = kDefaultSeed);

// Searches denominator degrees q = 0..max_den_degree for a certified
// rational transform Q(f'(x))·f(x)^2 = P(f'(x)); q = 0 is the
// polynomial case.
std::optional<RationalFit> fit_rational_legendre(const CubicForm& f, int max_den_degree = 6,
                                                 std::uint64_t seed = kDefaultSeed);

// Full pipeline: degree validation -> cone -> log-Hessian -> fit.
// Failures become structured verdicts, never exceptions.
LegendreVerdict analyze(const CubicForm& f, std::uint64_t seed = kDefaultSeed);

namespace detail {

// All degree-d monomials in n variables, graded-lex descending.
std::vector<Monomial> monomial_basis(int n, int d);

enum class SolveMode { Auto, Exact, Modular };

struct FitOutcome {
    enum class Kind { Solved, Inconsistent, Underdetermined, Failed } kind;
    Poly solution;  // valid when Solved
    std::string detail;
    int rank = 0;
    int unknowns = 0;
    long samples_used = 0;
    int primes_used = 0;
    bool exact_inconsistency = false;
};

// Interpolation solve for g with g(f'(x)) = f(x)^2 (no certification).
FitOutcome solve_interpolation(const CubicForm& f, std::uint64_t seed,
                               SolveMode mode = SolveMode::Auto);

}  // namespace detail

}  // namespace cubic::legendre
