#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubic/monomial.hpp"
#include "cubic/rational.hpp"

namespace cubic {

// Sparse multivariate polynomial over the rationals with a fixed ambient
// variable count. Terms are stored sorted in graded-lex descending order
// with no zero coefficients, so equal polynomials compare equal termwise.
class Poly {
  public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const Rational& c);
    static Poly variable(int n, int i);
    static Poly from_term(int n, const Monomial& m, const Rational& c);
    // Builds from an arbitrary term list (combines duplicates, drops zeros).
    static Poly from_terms(int n, std::vector<Term> terms);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree of the leading term; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
    bool is_homogeneous(int d) const;

    Rational coeff(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational eval(std::span<const Rational> x) const;

    // Partial derivative with respect to variable i.
    Poly derivative(int i) const;

    // Replaces variable i by images[i]; all images must share one ambient
    // variable count, which becomes the result's.
    Poly substitute(std::span<const Poly> images) const;

    Poly pow(int k) const;

    // Canonical text form, graded-lex descending, explicit '*' and '^'.
    std::string to_string() const;

  private:
    void normalize();  // sort + combine + drop zeros

    int n_ = 0;
    std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

}  // namespace cubic
