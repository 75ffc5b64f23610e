#include "cubic/jordan.hpp"

#include <stdexcept>

#include "cubic/rng.hpp"
#include "cubic/tau.hpp"

namespace cubic {

Vec JordanStructure::multiply(const Vec& a, const Vec& b) const {
    Vec out(n_);
    for (int i = 0; i < n_; ++i) {
        if (cubic::is_zero(a[i])) continue;
        for (int j = 0; j < n_; ++j) {
            if (cubic::is_zero(b[j])) continue;
            const Rational ab = a[i] * b[j];
            for (int k = 0; k < n_; ++k) {
                const Rational& c = c_at(i, j, k);
                if (!cubic::is_zero(c)) out[k] += ab * c;
            }
        }
    }
    return out;
}

QMatrix JordanStructure::left_mul(const Vec& a) const {
    QMatrix l(n_, n_);
    for (int k = 0; k < n_; ++k)
        for (int j = 0; j < n_; ++j) {
            Rational s(0);
            for (int i = 0; i < n_; ++i) {
                const Rational& c = c_at(i, j, k);
                if (!cubic::is_zero(c)) s += a[i] * c;
            }
            l.at(k, j) = s;
        }
    return l;
}

JordanStructure jordan_product(const CubicForm& f, const Vec& I) {
    const int n = f.vars();
    const Rational c = f.eval(I);
    if (cubic::is_zero(c))
        throw PreconditionError(PreconditionError::Code::UnitValueZero,
                                "jordan_product: f(I) = 0");
    const TauMatrix ti = tau(f, I);
    auto inv_i = inverse(ti.m);
    if (!inv_i)
        throw PreconditionError(PreconditionError::Code::TauSingular,
                                "jordan_product: tau_{f,I} is singular");

    // H_A = tau_I^{-1} tau_A; the product reads off the first-order part
    // of H along each basis direction: (e_i o e_j)_k = -1/2 (D_i)_{k,j}.
    std::vector<Rational> sc(static_cast<std::size_t>(n) * n * n, Rational(0));
    for (int i = 0; i < n; ++i) {
        const QMatrix d = tau_detail::tau_derivative_dual(f, I, Vec::unit(n, i));
        const QMatrix m = *inv_i * d;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                sc[(static_cast<std::size_t>(i) * n + j) * n + k] =
                    make_rational(-1, 2) * m.at(k, j);
    }

    JordanStructure J(n, I, c, std::move(sc), f);
    // Build-time sanity: the tensor is symmetric and I is a unit.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (J.c_at(i, j, k) != J.c_at(j, i, k))
                    throw std::logic_error("jordan_product: structure constants not symmetric");
    for (int j = 0; j < n; ++j)
        if (!(J.multiply(I, Vec::unit(n, j)) == Vec::unit(n, j)))
            throw std::logic_error("jordan_product: base point is not a unit");
    return J;
}

QMatrix quadratic_rep(const JordanStructure& J, const Vec& A) {
    const QMatrix l = J.left_mul(A);
    const QMatrix la2 = J.left_mul(J.multiply(A, A));
    return make_rational(2) * (l * l) - la2;
}

QMatrix quadratic_rep_minus(const JordanStructure& J, const Vec& A) {
    const QMatrix l = J.left_mul(A);
    return l * l - J.left_mul(J.multiply(A, A));
}

namespace {

Vec random_vec(Rng& rng, int n, bool nonzero) {
    while (true) {
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = rng.rational_in(-7, 7);
        if (!nonzero || !v.is_zero()) return v;
    }
}

Vec random_off_hypersurface(Rng& rng, const JordanStructure& J) {
    for (int tries = 0; tries < 10000; ++tries) {
        Vec v = random_vec(rng, J.dim(), true);
        if (!cubic::is_zero(J.norm().eval(v))) return v;
    }
    throw std::runtime_error("jordan_verify: could not sample f != 0");
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += rational_to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

JordanReport jordan_verify(const JordanStructure& J, int trials, std::uint64_t seed,
                           const std::optional<Vec>& singular_witness) {
    const int n = J.dim();
    const CubicForm& f = J.norm();
    const Rational c = J.unit_value();
    JordanReport rep;
    rep.trials = trials;
    rep.unit_value = c;
    rep.formula_note =
        "quadratic representation taken as P(A) = 2 L_A^2 - L_{A^2}; the textbook "
        "R_A = L_A^2 - L_{A^2} fails the composition identity on these algebras";
    Rng rng = Rng(seed).derive(0x6a6f7264);

    JordanCheck commut{"commutativity", true, ""};
    for (int i = 0; i < n && commut.pass; ++i)
        for (int j = 0; j < n && commut.pass; ++j)
            for (int k = 0; k < n; ++k)
                if (J.c_at(i, j, k) != J.c_at(j, i, k)) {
                    commut.pass = false;
                    commut.witness = "c(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ") asymmetric";
                    break;
                }
    rep.checks.push_back(std::move(commut));

    JordanCheck unit{"unit", true, ""};
    JordanCheck jordan_id{"jordan_identity", true, ""};
    JordanCheck composition{"composition", true, ""};
    JordanCheck invert{"invertibility", true, ""};
    JordanCheck inverse_law{"inverse_law", true, ""};

    for (int t = 0; t < trials; ++t) {
        const Vec A = random_off_hypersurface(rng, J);
        const Vec B = random_vec(rng, n, false);

        if (unit.pass && !(J.multiply(J.unit(), A) == A)) {
            unit.pass = false;
            unit.witness = vec_to_string(A);
        }

        if (jordan_id.pass) {
            const Vec a2 = J.multiply(A, A);
            const Vec lhs = J.multiply(a2, J.multiply(A, B));
            const Vec rhs = J.multiply(A, J.multiply(a2, B));
            if (!(lhs == rhs)) {
                jordan_id.pass = false;
                jordan_id.witness = "A=" + vec_to_string(A) + " B=" + vec_to_string(B);
            }
        }

        const QMatrix p = quadratic_rep(J, A);
        if (composition.pass) {
            // f(P(A)B)·c^2 = f(A)^2 f(B); c = f(I) (1 for catalog units).
            const Rational lhs = f.eval(p * B) * c * c;
            const Rational rhs = f.eval(A) * f.eval(A) * f.eval(B);
            if (lhs != rhs) {
                composition.pass = false;
                composition.witness = "A=" + vec_to_string(A) + " B=" + vec_to_string(B);
            }
        }

        if (invert.pass && cubic::is_zero(determinant(p))) {
            invert.pass = false;
            invert.witness = "P(A) singular at f(A) != 0, A=" + vec_to_string(A);
        }

        if (inverse_law.pass) {
            auto pinv = inverse(p);
            if (!pinv) {
                inverse_law.pass = false;
                inverse_law.witness = "P(A) not invertible, A=" + vec_to_string(A);
            } else {
                const Vec ainv = *pinv * A;
                const bool fixes = p * ainv == A;  // P(A)(A^-1) = A
                const bool unit_prod = J.multiply(A, ainv) == J.unit();
                if (!fixes || !unit_prod) {
                    inverse_law.pass = false;
                    inverse_law.witness = "A=" + vec_to_string(A);
                }
            }
        }
    }

    if (invert.pass && singular_witness) {
        const QMatrix p = quadratic_rep(J, *singular_witness);
        if (!cubic::is_zero(determinant(p))) {
            invert.pass = false;
            invert.witness = "P(A) invertible at singular witness " +
                             vec_to_string(*singular_witness);
        }
    }

    rep.checks.push_back(std::move(unit));
    rep.checks.push_back(std::move(jordan_id));
    rep.checks.push_back(std::move(composition));
    rep.checks.push_back(std::move(invert));
    rep.checks.push_back(std::move(inverse_law));
    return rep;
}

namespace jordan_detail {

namespace {

// Fully reduced row set (each stored row vanishes at every other row's
// pivot), so one forward pass decides membership.
struct Span {
    int n;
    std::vector<std::pair<int, Vec>> rows;  // (pivot column, reduced vector)

    bool add(Vec v) {
        for (auto& [pc, row] : rows) {
            if (cubic::is_zero(v[pc])) continue;
            const Rational fct = v[pc];
            for (int j = 0; j < n; ++j) v[j] -= fct * row[j];
        }
        int pivot = -1;
        for (int j = 0; j < n; ++j)
            if (!cubic::is_zero(v[j])) {
                pivot = j;
                break;
            }
        if (pivot < 0) return false;
        const Rational inv = 1 / v[pivot];
        for (int j = 0; j < n; ++j) v[j] *= inv;
        for (auto& [pc, row] : rows) {
            if (cubic::is_zero(row[pivot])) continue;
            const Rational fct = row[pivot];
            for (int j = 0; j < n; ++j) row[j] -= fct * v[j];
        }
        rows.emplace_back(pivot, std::move(v));
        return true;
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

}  // namespace

std::vector<Vec> ideal_closure(const JordanStructure& J, const Vec& start) {
    const int n = J.dim();
    Span span{n, {}};
    std::vector<Vec> frontier;
    if (span.add(start)) frontier.push_back(start);
    while (!frontier.empty() && span.dim() < n) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (int i = 0; i < n; ++i) {
                Vec w = J.multiply(Vec::unit(n, i), v);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    std::vector<Vec> basis;
    basis.reserve(span.rows.size());
    for (auto& [pc, row] : span.rows) basis.push_back(row);
    return basis;
}

}  // namespace jordan_detail

bool simplicity_probe(const JordanStructure& J, int trials, std::uint64_t seed) {
    const int n = J.dim();
    Rng rng = Rng(seed).derive(0x73696d70);
    std::vector<Vec> starts;
    for (int i = 0; i < n; ++i) starts.push_back(Vec::unit(n, i));
    for (int t = 0; t < trials; ++t) starts.push_back(random_vec(rng, n, true));
    for (const auto& s : starts)
        if (static_cast<int>(jordan_detail::ideal_closure(J, s).size()) < n) return false;
    return true;
}

}  // namespace cubic
