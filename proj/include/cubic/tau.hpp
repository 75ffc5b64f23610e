#pragma once

#include <stdexcept>
#include <string>

#include "cubic/cubic_form.hpp"

namespace cubic {

// Precondition failures of the geometric checks, one code per guard so
// callers and tests can tell them apart.
struct PreconditionError : std::domain_error {
    enum class Code {
        BasePointOnHypersurface,  // f(A) = 0
        PointNotSingular,         // f'(z) != 0
        PairingVanishes,          // f'(A)(z) = 0, z outside U_A
        TauSingular,              // tau matrix not invertible
        UnitValueZero,            // f(I) = 0
    };
    Code code;
    PreconditionError(Code c, const std::string& what) : std::domain_error(what), code(c) {}
};

// The second logarithmic differential of f at A, as the symmetric matrix
// (f(A)·Hess f(A) - f'(A) ⊗ f'(A)) / f(A)^2 mapping V to V*.
struct TauMatrix {
    QMatrix m;
    Vec base_point;
};

TauMatrix tau(const CubicForm& f, const Vec& A);

// With A* = f'(A)/f(A): whether tau_{f*,A*} · tau_{f,A} = Id exactly.
bool tau_inverse_check(const CubicForm& f, const CubicForm& fstar, const Vec& A);

struct TauGeometricResult {
    bool pass = false;
    Vec z_prime;
    bool z_prime_on_hypersurface = false;
    bool z_prime_smooth = false;
    bool tangent_proportional = false;
    bool explicit_formula = false;
};

// Geometric content of tau on the singular locus: builds
// z' = A - (f(A)/f'(A)(z))·z, checks f(z') = 0 and f'(z') != 0, checks
// tau_{f,A}(z) is proportional to f'(z'), and checks the closed formula
// tau_{f,A}(z) = 3(2 f(A) Q(z,A,-) - f'(A)(z) Q(A,A,-)) / f(A)^2.
TauGeometricResult tau_geometric_check(const CubicForm& f, const Vec& A, const Vec& z);

// g = tau_{f,A2}^{-1} · tau_{f,A1}; maps the cone over Sing V(f) to itself.
QMatrix singular_orbit_map(const CubicForm& f, const Vec& A1, const Vec& A2);

// H_A = tau_{f,I}^{-1} · tau_{f,A}.
QMatrix h_map(const CubicForm& f, const Vec& I, const Vec& A);

// First-order expansion of A -> tau_{f,I}^{-1}(tau_{f,A}(I)) around I:
// true iff the differential is exactly -2·Id.
bool phi_derivative_check(const CubicForm& f, const Vec& I);

namespace tau_detail {

// d/dt tau_{f,I+t·dir} at t = 0, by dual-number arithmetic.
QMatrix tau_derivative_dual(const CubicForm& f, const Vec& I, const Vec& dir);

// Same derivative by full polynomial-in-t arithmetic and the quotient
// rule; the bring-up cross-check for the dual-number encoding.
QMatrix tau_derivative_polyt(const CubicForm& f, const Vec& I, const Vec& dir);

}  // namespace tau_detail

}  // namespace cubic
