#pragma once

#include <stdexcept>

#include "cubic/rational.hpp"

namespace cubic {

// First-order truncated polynomial a + b·t with t^2 = 0; the exact
// formal-parameter arithmetic used for derivatives at a point.
struct Dual {
    Rational a;  // value
    Rational b;  // derivative

    Dual() : a(0), b(0) {}
    Dual(Rational value, Rational deriv) : a(std::move(value)), b(std::move(deriv)) {}
    explicit Dual(const Rational& value) : a(value), b(0) {}

    Dual operator+(const Dual& o) const { return {a + o.a, b + o.b}; }
    Dual operator-(const Dual& o) const { return {a - o.a, b - o.b}; }
    Dual operator-() const { return {-a, -b}; }
    Dual operator*(const Dual& o) const { return {a * o.a, a * o.b + b * o.a}; }

    Dual inv() const {
        if (cubic::is_zero(a)) throw std::domain_error("Dual::inv of a nilpotent");
        return {1 / a, -b / (a * a)};
    }

    Dual operator/(const Dual& o) const { return *this * o.inv(); }
};

}  // namespace cubic
