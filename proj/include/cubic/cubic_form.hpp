#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubic/linalg.hpp"
#include "cubic/poly.hpp"

namespace cubic {

// Validated homogeneous degree-3 form with cached differential data.
class CubicForm {
  public:
    // Throws std::invalid_argument unless p is homogeneous of degree 3
    // and has at least 2 variables.
    explicit CubicForm(Poly p);

    int vars() const { return poly_.vars(); }
    const Poly& poly() const { return poly_; }

    Rational eval(const Vec& x) const;

    // Component i is the degree-2 form df/dx_i.
    const std::vector<Poly>& gradient() const { return gradient_; }
    // Symmetric matrix of degree-1 forms d2f/dx_i dx_j.
    const std::vector<std::vector<Poly>>& hessian() const { return hessian_; }

    // The symmetric trilinear form with Q(x,x,x) = f(x), by the 7-term
    // inclusion-exclusion over f; no tensor is materialized.
    Rational polarize(const Vec& a, const Vec& b, const Vec& c) const;

    // Q(e_i, e_j, e_k) read off the coefficients; fast path for the
    // linear-algebra layers and cross-checked against polarize in tests.
    Rational q_basis(int i, int j, int k) const;

    // f'(x) evaluated exactly: coordinate i is 3 Q(x,x,e_i).
    Covec grad_at(const Vec& x) const;
    // Hess f(x): entry (i,j) is 6 Q(e_i,e_j,x).
    QMatrix hess_at(const Vec& x) const;

    // A nonzero v with Q(v,.,.) identically zero, if one exists: the
    // witness that V(f) is a cone with a vertex of order three. Computed
    // as the kernel of the flattened polarization slice map.
    std::optional<Vec> cone_direction() const;

  private:
    Poly poly_;
    std::vector<Poly> gradient_;
    std::vector<std::vector<Poly>> hessian_;
    // Sparse Q on basis triples, keyed i <= j <= k.
    std::vector<std::pair<std::array<int, 3>, Rational>> q_entries_;
};

}  // namespace cubic
