#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cubic/rational.hpp"

namespace cubic {

// Point of V in basis coordinates.
struct Vec {
    std::vector<Rational> c;

    Vec() = default;
    explicit Vec(std::size_t n) : c(n, Rational(0)) {}
    explicit Vec(std::vector<Rational> coords) : c(std::move(coords)) {}

    std::size_t dim() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    bool operator==(const Vec& o) const { return c == o.c; }
    bool is_zero() const;

    static Vec unit(std::size_t n, std::size_t i) {
        Vec v(n);
        v.c[i] = 1;
        return v;
    }
};

// Element of V* in dual-basis coordinates.
struct Covec {
    std::vector<Rational> c;

    Covec() = default;
    explicit Covec(std::size_t n) : c(n, Rational(0)) {}
    explicit Covec(std::vector<Rational> coords) : c(std::move(coords)) {}

    std::size_t dim() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }
    bool operator==(const Covec& o) const { return c == o.c; }
    bool is_zero() const;
};

Rational pair(const Covec& w, const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

// Dense rational matrix, row major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    QMatrix transposed() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& a);
Vec operator*(const QMatrix& a, const Vec& v);

// Exact description of the solution set of M x = b.
struct LinearSolution {
    enum class Kind { Inconsistent, Unique, Affine } kind;
    int rank = 0;
    std::vector<Rational> particular;                // Unique / Affine
    std::vector<std::vector<Rational>> nullspace;    // Affine basis (empty if Unique)
};

// Fraction-free (Bareiss) elimination with exact rational back-substitution.
LinearSolution solve_linear(const QMatrix& M, const std::vector<Rational>& b);

int rank(const QMatrix& M);
Rational determinant(const QMatrix& M);
std::optional<QMatrix> inverse(const QMatrix& M);
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& M);

}  // namespace cubic
