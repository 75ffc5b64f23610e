#include "cubic/cubic_form.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace cubic {

CubicForm::CubicForm(Poly p) : poly_(std::move(p)) {
    if (poly_.vars() < 2)
        throw std::invalid_argument("cubic form needs dimension >= 2");
    if (poly_.is_zero() || !poly_.is_homogeneous(3))
        throw std::invalid_argument("polynomial is not homogeneous of degree 3");
    const int n = poly_.vars();
    gradient_.reserve(n);
    for (int i = 0; i < n; ++i) gradient_.push_back(poly_.derivative(i));
    hessian_.assign(n, std::vector<Poly>(n, Poly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            hessian_[i][j] = gradient_[i].derivative(j);
            if (j != i) hessian_[j][i] = hessian_[i][j];
        }
    // Coefficient of x_i^3 is Q(iii); of x_i^2 x_j is 3 Q(iij); of
    // x_i x_j x_k is 6 Q(ijk).
    for (const auto& [m, c] : poly_.terms()) {
        std::array<int, 3> idx{};
        int pos = 0;
        for (int v = 0; v < n; ++v)
            for (int rep = 0; rep < m.e[v]; ++rep) idx[pos++] = v;
        int mult = 1;
        if (idx[0] == idx[1] && idx[1] == idx[2])
            mult = 1;
        else if (idx[0] == idx[1] || idx[1] == idx[2])
            mult = 3;
        else
            mult = 6;
        q_entries_.emplace_back(idx, c / mult);
    }
}

Rational CubicForm::eval(const Vec& x) const { return poly_.eval(x.c); }

Rational CubicForm::polarize(const Vec& a, const Vec& b, const Vec& c) const {
    const std::size_t n = static_cast<std::size_t>(poly_.vars());
    if (a.dim() != n || b.dim() != n || c.dim() != n)
        throw std::invalid_argument("polarize: dimension mismatch");
    auto f = [&](const Vec& v) { return poly_.eval(v.c); };
    const Vec ab = a + b, ac = a + c, bc = b + c;
    const Vec abc = ab + c;
    Rational s = f(abc) - f(ab) - f(ac) - f(bc) + f(a) + f(b) + f(c);
    return s / 6;
}

Rational CubicForm::q_basis(int i, int j, int k) const {
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    for (const auto& [idx, q] : q_entries_)
        if (idx == key) return q;
    return Rational(0);
}

Covec CubicForm::grad_at(const Vec& x) const {
    const int n = poly_.vars();
    if (static_cast<int>(x.dim()) != n)
        throw std::invalid_argument("grad_at: dimension mismatch");
    Covec g(n);
    // 3 Q(x,x,e_i) accumulated over the sparse entries; each sorted triple
    // (a,b,c) contributes through every choice of the free slot.
    for (const auto& [idx, q] : q_entries_) {
        const auto [a, b, c] = idx;
        auto add = [&](int free_slot, int u, int v, int mult) {
            g[free_slot] += 3 * mult * q * x[u] * x[v];
        };
        if (a == b && b == c) {
            add(a, a, a, 1);
        } else if (a == b) {
            add(c, a, a, 1);
            add(a, a, c, 2);
        } else if (b == c) {
            add(a, b, b, 1);
            add(b, a, b, 2);
        } else {
            add(a, b, c, 2);
            add(b, a, c, 2);
            add(c, a, b, 2);
        }
    }
    return g;
}

QMatrix CubicForm::hess_at(const Vec& x) const {
    const int n = poly_.vars();
    if (static_cast<int>(x.dim()) != n)
        throw std::invalid_argument("hess_at: dimension mismatch");
    QMatrix h(n, n);
    // 6 Q(e_i,e_j,x): each sorted triple splits into (pair, remainder)
    // in at most three distinct ways, one contribution each.
    for (const auto& [idx, q] : q_entries_) {
        const auto [a, b, c] = idx;
        auto add = [&](int i, int j, int k) {
            Rational v = 6 * q * x[k];
            h.at(i, j) += v;
            if (i != j) h.at(j, i) += v;
        };
        if (a == b && b == c) {
            add(a, a, a);
        } else if (a == b) {
            add(a, a, c);
            add(a, c, a);
        } else if (b == c) {
            add(b, b, a);
            add(a, b, b);
        } else {
            add(a, b, c);
            add(a, c, b);
            add(b, c, a);
        }
    }
    return h;
}

std::optional<Vec> CubicForm::cone_direction() const {
    const int n = poly_.vars();
    // Rows indexed by pairs i <= j, columns by the slice direction v:
    // row (i,j) of the flattening is v -> Q(v, e_i, e_j).
    QMatrix m(n * (n + 1) / 2, n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++row)
            for (int k = 0; k < n; ++k) m.at(row, k) = q_basis(k, i, j);
    auto basis = kernel_basis(m);
    if (basis.empty()) return std::nullopt;
    return Vec(basis.front());
}

}  // namespace cubic
