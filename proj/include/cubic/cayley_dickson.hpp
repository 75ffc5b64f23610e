#pragma once

#include <vector>

#include "cubic/rational.hpp"

namespace cubic {

// Cayley-Dickson doubling product on coordinate vectors of length 2^k,
// generic in the coefficient ring so the same recursion multiplies both
// rational elements and elements with polynomial coordinates.
// (p,q)·(r,s) = (p r - conj(s) q, s p + q conj(r)); level 0 is the
// ground ring product.
template <typename R>
std::vector<R> cd_mul_coords(const std::vector<R>& a, const std::vector<R>& b) {
    const std::size_t n = a.size();
    if (n == 1) return {a[0] * b[0]};
    const std::size_t h = n / 2;
    auto lo = [&](const std::vector<R>& v) { return std::vector<R>(v.begin(), v.begin() + h); };
    auto hi = [&](const std::vector<R>& v) { return std::vector<R>(v.begin() + h, v.end()); };
    auto conj = [&](std::vector<R> v) {
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
        return v;
    };
    const std::vector<R> p = lo(a), q = hi(a), r = lo(b), s = hi(b);
    const std::vector<R> first_a = cd_mul_coords(p, r);
    const std::vector<R> first_b = cd_mul_coords(conj(s), q);
    const std::vector<R> second_a = cd_mul_coords(s, p);
    const std::vector<R> second_b = cd_mul_coords(q, conj(r));
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < h; ++i) out.push_back(first_a[i] - first_b[i]);
    for (std::size_t i = 0; i < h; ++i) out.push_back(second_a[i] + second_b[i]);
    return out;
}

// Element of the level-k composition algebra (R, C, H, O over the
// rationals for k = 0..3).
struct CDElem {
    int level = 0;
    std::vector<Rational> coords;

    CDElem() : coords{Rational(0)} {}
    CDElem(int lvl, std::vector<Rational> c);

    static CDElem zero(int level);
    static CDElem basis(int level, int i);

    std::size_t dim() const { return coords.size(); }
    bool operator==(const CDElem& o) const { return level == o.level && coords == o.coords; }
};

CDElem cd_mul(const CDElem& a, const CDElem& b);  // throws on level mismatch
CDElem cd_conj(const CDElem& a);
Rational cd_norm(const CDElem& a);  // a·conj(a), equal to the coordinate sum of squares
Rational cd_re(const CDElem& a);
CDElem cd_add(const CDElem& a, const CDElem& b);
CDElem cd_neg(const CDElem& a);

}  // namespace cubic
