#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubic/cubic_form.hpp"

namespace cubic {

// Jordan algebra carved out of a cubic norm at a base point I with
// f(I) != 0: the structure-constant tensor of the McCrimmon product
// A*B = -1/2 d_I(M -> H_M(B))(A), the unit I, and the originating form.
class JordanStructure {
  public:
    JordanStructure(int n, Vec unit, Rational unit_value, std::vector<Rational> sc,
                    CubicForm norm)
        : n_(n),
          unit_(std::move(unit)),
          unit_value_(std::move(unit_value)),
          sc_(std::move(sc)),
          norm_(std::move(norm)) {}

    int dim() const { return n_; }
    const Vec& unit() const { return unit_; }
    // c = f(I); 1 for every catalog base point. The composition identity
    // is certified in its c-scaled form.
    const Rational& unit_value() const { return unit_value_; }
    const CubicForm& norm() const { return norm_; }
    const std::vector<Rational>& structure_constants() const { return sc_; }

    const Rational& c_at(int i, int j, int k) const { return sc_[(i * n_ + j) * n_ + k]; }

    Vec multiply(const Vec& a, const Vec& b) const;
    QMatrix left_mul(const Vec& a) const;  // L_A

  private:
    int n_;
    Vec unit_;
    Rational unit_value_;
    std::vector<Rational> sc_;  // (i*n + j)*n + k
    CubicForm norm_;
};

// Builds the structure constants by exact first-order formal-parameter
// expansion of H_{I+t e_i}; asserts tensor symmetry and the unit law.
JordanStructure jordan_product(const CubicForm& f, const Vec& I);

// P(A) = 2 L_A^2 - L_{A^2}; the variant satisfying the norm composition
// identity. quadratic_rep_minus exposes L_A^2 - L_{A^2} for audit.
QMatrix quadratic_rep(const JordanStructure& J, const Vec& A);
QMatrix quadratic_rep_minus(const JordanStructure& J, const Vec& A);

struct JordanCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // first counterexample, when failing
};

struct JordanReport {
    std::vector<JordanCheck> checks;
    int trials = 0;
    Rational unit_value;
    std::string formula_note;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const JordanCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// Exact randomized verification: commutativity, unit, the Jordan
// identity, the composition identity with P, invertibility of P(A) iff
// f(A) != 0 (the singular witness exercises the 'only if' side), and the
// inverse laws. Failures are reported, not thrown.
JordanReport jordan_verify(const JordanStructure& J, int trials, std::uint64_t seed,
                           const std::optional<Vec>& singular_witness = std::nullopt);

// Probabilistic witness of simplicity: closes span{A} under left
// multiplication by all basis vectors, for seeded random starts plus
// every basis vector; true iff every closure reaches the whole space.
bool simplicity_probe(const JordanStructure& J, int trials, std::uint64_t seed);

namespace jordan_detail {
// The invariant subspace generated by `start`; exposed for the probe's
// negative control tests.
std::vector<Vec> ideal_closure(const JordanStructure& J, const Vec& start);
}  // namespace jordan_detail

}  // namespace cubic
