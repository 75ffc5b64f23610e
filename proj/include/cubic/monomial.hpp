#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubic {

// Exponent vector of a power product; one entry per ambient variable.
struct Monomial {
    std::vector<std::uint8_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<std::uint8_t> exps) : e(std::move(exps)) {}

    std::size_t vars() const { return e.size(); }

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] = static_cast<std::uint8_t>(r.e[i] + o.e[i]);
        return r;
    }
};

// Graded lexicographic: higher total degree first, then lex on exponents.
// Defines the canonical term order used for storage and printing.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace cubic
