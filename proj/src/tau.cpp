#include "cubic/tau.hpp"

#include "cubic/dual.hpp"

namespace cubic {

namespace {

Rational require_nonzero_value(const CubicForm& f, const Vec& A) {
    Rational fa = f.eval(A);
    if (cubic::is_zero(fa))
        throw PreconditionError(PreconditionError::Code::BasePointOnHypersurface,
                                "base point lies on the hypersurface (f(A) = 0)");
    return fa;
}

}  // namespace

TauMatrix tau(const CubicForm& f, const Vec& A) {
    const int n = f.vars();
    const Rational fa = require_nonzero_value(f, A);
    const QMatrix h = f.hess_at(A);
    const Covec g = f.grad_at(A);
    const Rational fa2 = fa * fa;
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (fa * h.at(i, j) - g[i] * g[j]) / fa2;
    return {std::move(m), A};
}

bool tau_inverse_check(const CubicForm& f, const CubicForm& fstar, const Vec& A) {
    const Rational fa = require_nonzero_value(f, A);
    const Covec g = f.grad_at(A);
    Vec a_star(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) a_star[i] = g[i] / fa;
    const TauMatrix t = tau(f, A);
    const TauMatrix ts = tau(fstar, a_star);
    return ts.m * t.m == QMatrix::identity(f.vars());
}

TauGeometricResult tau_geometric_check(const CubicForm& f, const Vec& A, const Vec& z) {
    const int n = f.vars();
    const Rational fa = require_nonzero_value(f, A);
    const Covec gz = f.grad_at(z);
    if (!gz.is_zero())
        throw PreconditionError(PreconditionError::Code::PointNotSingular,
                                "z is not on the cone over the singular locus (f'(z) != 0)");
    const Covec ga = f.grad_at(A);
    const Rational pairing = pair(ga, z);  // f'(A)(z) = 3 Q(A,A,z)
    if (cubic::is_zero(pairing))
        throw PreconditionError(PreconditionError::Code::PairingVanishes,
                                "f'(A)(z) = 0: z lies outside U_A");

    TauGeometricResult res;
    res.z_prime = A - (fa / pairing) * z;
    res.z_prime_on_hypersurface = cubic::is_zero(f.eval(res.z_prime));
    const Covec gzp = f.grad_at(res.z_prime);
    res.z_prime_smooth = !gzp.is_zero();

    const TauMatrix t = tau(f, A);
    const Vec tz = t.m * z;  // tau_{f,A}(z), a covector in dual coordinates

    // Proportionality of tz and f'(z'): all 2x2 minors vanish.
    res.tangent_proportional = true;
    for (int i = 0; i < n && res.tangent_proportional; ++i)
        for (int j = i + 1; j < n; ++j)
            if (tz[i] * gzp[j] != tz[j] * gzp[i]) {
                res.tangent_proportional = false;
                break;
            }

    // tau_{f,A}(z) = 3 (2 f(A) Q(z,A,-) - f'(A)(z) Q(A,A,-)) / f(A)^2.
    res.explicit_formula = true;
    const Rational fa2 = fa * fa;
    for (int i = 0; i < n; ++i) {
        Vec ei = Vec::unit(n, i);
        const Rational qza = f.polarize(z, A, ei);
        const Rational qaa = f.polarize(A, A, ei);
        const Rational rhs = 3 * (2 * fa * qza - pairing * qaa) / fa2;
        if (tz[i] != rhs) {
            res.explicit_formula = false;
            break;
        }
    }

    res.pass = res.z_prime_on_hypersurface && res.z_prime_smooth &&
               res.tangent_proportional && res.explicit_formula;
    return res;
}

QMatrix singular_orbit_map(const CubicForm& f, const Vec& A1, const Vec& A2) {
    require_nonzero_value(f, A1);
    require_nonzero_value(f, A2);
    const TauMatrix t1 = tau(f, A1);
    const TauMatrix t2 = tau(f, A2);
    auto inv2 = inverse(t2.m);
    if (!inv2)
        throw PreconditionError(PreconditionError::Code::TauSingular,
                                "tau_{f,A2} is singular");
    return *inv2 * t1.m;
}

QMatrix h_map(const CubicForm& f, const Vec& I, const Vec& A) {
    require_nonzero_value(f, I);
    require_nonzero_value(f, A);
    const TauMatrix ti = tau(f, I);
    auto inv_i = inverse(ti.m);
    if (!inv_i)
        throw PreconditionError(PreconditionError::Code::TauSingular,
                                "tau_{f,I} is singular");
    return *inv_i * tau(f, A).m;
}

namespace tau_detail {

QMatrix tau_derivative_dual(const CubicForm& f, const Vec& I, const Vec& dir) {
    const int n = f.vars();
    // A(t) = I + t·dir. All ingredients are linear or quadratic in A, so
    // their dual parts come from polarization: f(A) = f(I) + t f'(I)(dir),
    // Hess(A) = Hess(I) + t Hess(dir), grad(A) = grad(I) + t Hess(I)·dir.
    const Rational f0 = f.eval(I);
    if (cubic::is_zero(f0))
        throw PreconditionError(PreconditionError::Code::UnitValueZero, "f(I) = 0");
    const Covec gI = f.grad_at(I);
    const Rational f1 = pair(gI, dir);
    const QMatrix h0 = f.hess_at(I);
    const QMatrix h1 = f.hess_at(dir);
    const Vec hdir = h0 * dir;  // coordinates of Hess(I)·dir

    QMatrix deriv(n, n);
    const Dual fA(f0, f1);
    const Dual inv_fA2 = (fA * fA).inv();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Dual hij(h0.at(i, j), h1.at(i, j));
            const Dual gi(gI[i], hdir[i]);
            const Dual gj(gI[j], hdir[j]);
            const Dual tau_ij = (fA * hij - gi * gj) * inv_fA2;
            deriv.at(i, j) = tau_ij.b;
        }
    return deriv;
}

QMatrix tau_derivative_polyt(const CubicForm& f, const Vec& I, const Vec& dir) {
    const int n = f.vars();
    if (cubic::is_zero(f.eval(I)))
        throw PreconditionError(PreconditionError::Code::UnitValueZero, "f(I) = 0");
    // Substitute the line x = I + t·dir into all entries, then apply the
    // quotient rule to N(t)/D(t) at t = 0.
    std::vector<Poly> line;
    line.reserve(n);
    for (int i = 0; i < n; ++i) {
        Poly l = Poly::constant(1, I[i]);
        l += Poly::variable(1, 0) * dir[i];
        line.push_back(std::move(l));
    }
    const Poly ft = f.poly().substitute(line);   // cubic in t
    const Poly dt = ft * ft;                     // denominator f(A(t))^2
    auto value_at0 = [](const Poly& p) { return p.eval(std::vector<Rational>{Rational(0)}); };
    auto deriv_at0 = [&](const Poly& p) { return value_at0(p.derivative(0)); };

    std::vector<Poly> grad_t;
    grad_t.reserve(n);
    for (int i = 0; i < n; ++i) grad_t.push_back(f.gradient()[i].substitute(line));

    QMatrix out(n, n);
    const Rational d0 = value_at0(dt);
    const Rational d1 = deriv_at0(dt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly hij_t = f.hessian()[i][j].substitute(line);
            const Poly num = ft * hij_t - grad_t[i] * grad_t[j];
            const Rational n0 = value_at0(num);
            const Rational n1 = deriv_at0(num);
            out.at(i, j) = (n1 * d0 - n0 * d1) / (d0 * d0);
        }
    return out;
}

}  // namespace tau_detail

bool phi_derivative_check(const CubicForm& f, const Vec& I) {
    const int n = f.vars();
    require_nonzero_value(f, I);
    const TauMatrix ti = tau(f, I);
    auto inv_i = inverse(ti.m);
    if (!inv_i)
        throw PreconditionError(PreconditionError::Code::TauSingular, "tau_{f,I} is singular");
    // d/dt tau_{f,I+t e_k}(I) composed with tau_{f,I}^{-1} must be -2 e_k.
    for (int k = 0; k < n; ++k) {
        const QMatrix d = tau_detail::tau_derivative_dual(f, I, Vec::unit(n, k));
        const Vec v = *inv_i * (d * I);
        for (int i = 0; i < n; ++i)
            if (v[i] != (i == k ? make_rational(-2) : Rational(0))) return false;
    }
    return true;
}

}  // namespace cubic
