#include "cubic/linalg.hpp"

#include <stdexcept>

namespace cubic {

bool Vec::is_zero() const {
    for (const auto& x : c)
        if (sgn(x) != 0) return false;
    return true;
}

bool Covec::is_zero() const {
    for (const auto& x : c)
        if (sgn(x) != 0) return false;
    return true;
}

Rational pair(const Covec& w, const Vec& v) {
    if (w.dim() != v.dim()) throw std::invalid_argument("pairing dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < v.dim(); ++i) s += w[i] * v[i];
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    QMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

Vec operator*(const QMatrix& a, const Vec& v) {
    if (a.cols() != static_cast<int>(v.dim()))
        throw std::invalid_argument("matvec dimension mismatch");
    Vec r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        Rational s(0);
        for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

namespace {

// Integer row echelon state after fraction-free elimination.
struct Echelon {
    std::vector<std::vector<Integer>> rows;  // echelon rows, integer entries
    std::vector<int> pivot_col;              // per echelon row
    int total_cols = 0;
};

// Bareiss elimination over the integers; rows are cleared of denominators
// first. Column pivoting skips fully-zero columns so rank-deficient input
// is handled. Entries stay minors of the input, bounding their growth.
Echelon bareiss(const QMatrix& M, const std::vector<Rational>* b) {
    const int m = M.rows();
    const int n = M.cols() + (b ? 1 : 0);
    Echelon e;
    e.total_cols = n;
    std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(n));
    for (int i = 0; i < m; ++i) {
        Integer lcm = 1;
        for (int j = 0; j < M.cols(); ++j) lcm = ::lcm(lcm, M.at(i, j).get_den());
        if (b) lcm = ::lcm(lcm, (*b)[i].get_den());
        for (int j = 0; j < M.cols(); ++j) {
            const Rational& q = M.at(i, j);
            rows[i][j] = q.get_num() * (lcm / q.get_den());
        }
        if (b) rows[i][n - 1] = (*b)[i].get_num() * (lcm / (*b)[i].get_den());
    }

    Integer prev = 1;
    int pr = 0;  // next pivot row slot
    for (int pc = 0; pc < M.cols() && pr < m; ++pc) {
        int sel = -1;
        for (int i = pr; i < m; ++i)
            if (sgn(rows[i][pc]) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[pr], rows[sel]);
        const Integer& piv = rows[pr][pc];
        for (int i = pr + 1; i < m; ++i) {
            for (int j = pc + 1; j < n; ++j) {
                Integer t = rows[i][j] * piv - rows[i][pc] * rows[pr][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = std::move(t);
            }
            rows[i][pc] = 0;
        }
        prev = piv;
        e.pivot_col.push_back(pc);
        ++pr;
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

LinearSolution solve_linear(const QMatrix& M, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != M.rows())
        throw std::invalid_argument("solve_linear: rhs size mismatch");
    const int n = M.cols();
    Echelon e = bareiss(M, &b);
    const int r = static_cast<int>(e.pivot_col.size());

    LinearSolution sol;
    sol.rank = r;

    // A row with zero coefficients and nonzero rhs certifies inconsistency.
    for (int i = r; i < static_cast<int>(e.rows.size()); ++i)
        if (sgn(e.rows[i][n]) != 0) {
            sol.kind = LinearSolution::Kind::Inconsistent;
            return sol;
        }

    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // Exact rational back-substitution for a given assignment of frees.
    auto back_solve = [&](const std::vector<Rational>& frees, bool homogeneous) {
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = frees[k];
        for (int i = r - 1; i >= 0; --i) {
            const int pc = e.pivot_col[i];
            Rational s = homogeneous ? Rational(0) : Rational(e.rows[i][n]);
            for (int j = pc + 1; j < n; ++j)
                if (sgn(e.rows[i][j]) != 0) s -= Rational(e.rows[i][j]) * x[j];
            x[pc] = s / Rational(e.rows[i][pc]);
        }
        return x;
    };

    sol.particular = back_solve(std::vector<Rational>(free_cols.size(), Rational(0)), false);
    if (free_cols.empty()) {
        sol.kind = LinearSolution::Kind::Unique;
        return sol;
    }
    sol.kind = LinearSolution::Kind::Affine;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::vector<Rational> frees(free_cols.size(), Rational(0));
        frees[k] = 1;
        sol.nullspace.push_back(back_solve(frees, true));
    }
    return sol;
}

int rank(const QMatrix& M) {
    return static_cast<int>(bareiss(M, nullptr).pivot_col.size());
}

Rational determinant(const QMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: not square");
    const int n = M.rows();
    if (n == 0) return Rational(1);
    // Track row scalings and swaps against the Bareiss pivot product.
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (int j = 0; j < n; ++j) lcm = ::lcm(lcm, M.at(i, j).get_den());
        scale /= Rational(lcm);
        for (int j = 0; j < n; ++j) {
            const Rational& q = M.at(i, j);
            rows[i][j] = q.get_num() * (lcm / q.get_den());
        }
    }
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int sel = -1;
        for (int i = k; i < n; ++i)
            if (sgn(rows[i][k]) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) return Rational(0);
        if (sel != k) {
            std::swap(rows[sel], rows[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer t = rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = std::move(t);
            }
            rows[i][k] = 0;
        }
        prev = rows[k][k];
    }
    return Rational(rows[n - 1][n - 1]) * scale * sign;
}

std::optional<QMatrix> inverse(const QMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("inverse: not square");
    const int n = M.rows();
    // Plain rational Gauss-Jordan; matrices here are small (n <= ~30).
    QMatrix a = M;
    QMatrix inv = QMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (sgn(a.at(i, col)) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) return std::nullopt;
        if (sel != col)
            for (int j = 0; j < n; ++j) {
                swap(a.at(sel, j), a.at(col, j));
                swap(inv.at(sel, j), inv.at(col, j));
            }
        const Rational piv = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= piv;
            inv.at(col, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || sgn(a.at(i, col)) == 0) continue;
            const Rational f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& M) {
    LinearSolution s = solve_linear(M, std::vector<Rational>(M.rows(), Rational(0)));
    return s.nullspace;
}

}  // namespace cubic
